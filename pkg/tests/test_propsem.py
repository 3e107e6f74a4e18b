"""Propositional evaluation, assignments and the tautology decision."""
import pytest
from hypothesis import given, settings, strategies as st

from pmsem.meanings import is_true, meaning, meaning_in_world, render_meaning
from pmsem.ontology import Complex, Pair, World
from pmsem.propsem import (
    PropAssignment,
    canonical_assignments,
    classify,
    constant_name,
    declared_assignment,
    default_world,
    enumerate_assignments,
    eval_prop,
    proposition,
    sampled_assignments,
)
from pmsem.syntax import parse

P_TRUE = meaning({Pair(Complex("P", (), True), True)})
P_FALSE = meaning({Pair(Complex("P", (), False), False)})
Q_TRUE = meaning({Pair(Complex("Q", (), True), True)})
Q_FALSE = meaning({Pair(Complex("Q", (), False), False)})


def h_of(**values):
    w = default_world(values).with_constants(
        {constant_name(v): is_true(m) for v, m in values.items()}
    )
    return PropAssignment(values=dict(values), world=w)


# ---------------------------------------------------------------------------
# the connective cases

def test_variable_returns_its_meaning():
    assert eval_prop(parse("p"), h_of(p=P_TRUE)) == P_TRUE


def test_negation_of_true_atom():
    m = eval_prop(parse("~p"), h_of(p=P_TRUE))
    assert m == meaning({Pair(Complex("P", (), True), False)})
    assert not is_true(m)


def test_negated_disjunction_pairs_both_rejections():
    h = h_of(p=P_TRUE, q=Q_FALSE)
    m = eval_prop(parse("~(p v q)"), h)
    assert m == meaning(
        {Pair(Complex("P", (), True), False), Pair(Complex("Q", (), False), True)}
    )
    assert not is_true(m)


def test_disjunction_unions_families():
    h = h_of(p=P_TRUE, q=Q_FALSE)
    m = eval_prop(parse("p v q"), h)
    assert m == meaning(
        {Pair(Complex("P", (), True), True)}, {Pair(Complex("Q", (), False), False)}
    )
    assert is_true(m)


def test_eval_rejects_uncovered_variable():
    with pytest.raises(ValueError):
        eval_prop(parse("p v q"), h_of(p=P_TRUE))


def test_eval_rejects_quantified_formulas():
    with pytest.raises(ValueError):
        eval_prop(parse("(x).S(x)"), h_of())


def test_proposition_carries_formula_and_meaning():
    f = parse("~p")
    pr = proposition(f, h_of(p=P_TRUE))
    assert pr.formula == f
    assert pr.meaning == eval_prop(f, h_of(p=P_TRUE))


# ---------------------------------------------------------------------------
# canonical assignments

def test_canonical_one_variable():
    hs = canonical_assignments(["p"])
    assert [h.values["p"] for h in hs] == [P_TRUE, P_FALSE]


def test_canonical_counts_grow_as_powers_of_two():
    assert len(canonical_assignments(["p", "q"])) == 4
    assert len(canonical_assignments(["p", "q", "r"])) == 8


def test_canonical_assignments_are_grounded():
    for h in canonical_assignments(["p", "q"]):
        for m in h.values.values():
            assert meaning_in_world(m, h.world)


def test_canonical_needs_declared_constants():
    w = World(constants=(("P", True),))
    with pytest.raises(ValueError):
        canonical_assignments(["p", "q"], w)


def test_declared_assignment_reads_constants():
    w = World(constants=(("P", True), ("Q", False)))
    h = declared_assignment(["p", "q"], w)
    assert h.values["p"] == P_TRUE
    assert h.values["q"] == Q_FALSE


def test_sampled_assignments_are_reproducible():
    w = default_world(["p", "q"])
    a = sampled_assignments(["p", "q"], w, seed=1, count=10)
    b = sampled_assignments(["p", "q"], w, seed=1, count=10)
    assert len(a) == 10
    assert [h.values for h in a] == [h.values for h in b]


def test_sampled_assignments_respect_size_bound():
    w = default_world(["p"])
    for h in sampled_assignments(["p"], w, seed=3, count=20, size_bound=2):
        m = h.values["p"]
        assert len(m.members) <= 2
        assert all(len(member) <= 2 for member in m.members)


def test_sampled_mode_requires_seed():
    with pytest.raises(ValueError):
        enumerate_assignments(["p"], None, "sampled", seed=None, count=5)


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        enumerate_assignments(["p"], None, "exhaustive")


# ---------------------------------------------------------------------------
# classification

def test_excluded_middle_is_tautology():
    assert classify(parse("p v ~p")).kind == "tautology"


def test_contradiction_detected():
    assert classify(parse("p . ~p")).kind == "contradiction"


def test_contingent_with_witnesses():
    v = classify(parse("p v q"))
    assert v.kind == "contingent"
    assert v.witness_true is not None
    assert not any(v.witness_false.truths().values())


def test_axiom_shapes_are_tautologies():
    for text in (
        "(p v p) => p",
        "q => (p v q)",
        "(p v q) => (q v p)",
        "(p v (q v r)) => (q v (p v r))",
        "(q => r) => ((p v q) => (p v r))",
    ):
        assert classify(parse(text)).kind == "tautology", text


def test_classify_counts_assignments():
    assert classify(parse("p v q")).assignments_checked == 4


def test_classify_sampled_mode():
    v = classify(parse("p v ~p"), mode="sampled", seed=11, count=16)
    assert v.kind == "tautology"
    assert v.assignments_checked == 16


# ---------------------------------------------------------------------------
# properties

_meanings = st.sampled_from([P_TRUE, P_FALSE, Q_TRUE, Q_FALSE])


@given(_meanings, _meanings)
@settings(max_examples=60)
def test_de_morgan_truth(mp, mq):
    h = h_of(p=mp, q=mq)
    lhs = eval_prop(parse("~(p v q)"), h)
    rhs = eval_prop(parse("~p . ~q"), h)
    assert is_true(lhs) == is_true(rhs)


@given(_meanings)
@settings(max_examples=40)
def test_double_negation_truth(mp):
    h = h_of(p=mp)
    assert is_true(eval_prop(parse("~(~p)"), h)) == is_true(eval_prop(parse("p"), h))


@given(_meanings, _meanings)
@settings(max_examples=60)
def test_policy_choice_never_changes_truth(mp, mq):
    h = h_of(p=mp, q=mq)
    for text in ("~(p v q)", "~(~p v ~q)", "p . q", "p => q", "p <=> q"):
        f = parse(text)
        assert is_true(eval_prop(f, h, "minimal")) == is_true(eval_prop(f, h, "full"))


def test_render_of_negated_disjunction():
    h = h_of(p=P_TRUE, q=Q_FALSE)
    m = eval_prop(parse("~(p v q)"), h)
    assert render_meaning(m) == "{{<P+,0>, <Q-,=>}}"

"""Meaning families and the operations the connectives are built from."""
import pytest
from hypothesis import given, settings, strategies as st

from pmsem.meanings import (
    Meaning,
    StructureMismatch,
    atom_meaning,
    disjoin,
    is_true,
    meaning,
    meaning_in_world,
    memberwise_union,
    negate,
    render_meaning,
    sorted_members,
    swap_family,
    transversals,
)
from pmsem.ontology import Complex, Pair, World

A = Pair(Complex("S", ("a",), True), True)
B = Pair(Complex("S", ("b",), False), False)
C = Pair(Complex("P", (), True), True)


def w_two():
    return World(
        individuals=("a", "b"),
        relations=(("S", 1),),
        facts=frozenset({("S", ("a",))}),
    )


# ---------------------------------------------------------------------------
# construction invariants

def test_meaning_rejects_empty_family():
    with pytest.raises(ValueError):
        Meaning(frozenset())


def test_meaning_rejects_empty_member():
    with pytest.raises(ValueError):
        meaning(set())


def test_meaning_is_hashable_and_comparable():
    assert meaning({A}) == meaning({A})
    assert hash(meaning({A})) == hash(meaning({A}))


# ---------------------------------------------------------------------------
# truth and ordering

def test_all_diagonal_singleton_is_true():
    assert is_true(meaning({A}))


def test_flipped_singleton_is_false():
    assert not is_true(meaning({B}))


def test_one_diagonal_member_suffices():
    m = meaning({B, Pair(Complex("Q", (), False), True)}, {Pair(Complex("Q", (), False), True)})
    assert is_true(m)


def test_diagonal_members_sort_first():
    m = meaning({B}, {A})
    first, second = sorted_members(m)
    assert all(p.diagonal for p in first)
    assert not all(p.diagonal for p in second)


def test_render_uses_sorted_order():
    m = meaning({B}, {A})
    assert render_meaning(m) == "{{<S(a)+,=>}, {<S(b)-,0>}}"


def test_meaning_in_world_checks_bases():
    assert meaning_in_world(meaning({A}), w_two())
    other = meaning({Pair(Complex("S", ("b",), True), True)})
    assert not meaning_in_world(other, w_two())


# ---------------------------------------------------------------------------
# transversals

def test_transversal_of_singleton_family():
    fam = frozenset({frozenset({A})})
    for policy in ("minimal", "full"):
        assert transversals(fam, policy) == fam


def test_transversal_of_two_singletons():
    fam = frozenset({frozenset({A}), frozenset({B})})
    expected = frozenset({frozenset({A, B})})
    for policy in ("minimal", "full"):
        assert transversals(fam, policy) == expected


def test_transversal_of_one_doubleton():
    fam = frozenset({frozenset({A, B})})
    assert transversals(fam, "minimal") == frozenset({frozenset({A}), frozenset({B})})
    assert transversals(fam, "full") == frozenset(
        {frozenset({A}), frozenset({B}), frozenset({A, B})}
    )


def test_transversal_rejects_unknown_policy():
    with pytest.raises(ValueError):
        transversals(frozenset({frozenset({A})}), "median")


def test_minimal_transversals_are_inclusion_minimal():
    fam = frozenset({frozenset({A, B}), frozenset({A, C})})
    out = transversals(fam, "minimal")
    for s in out:
        for t in out:
            assert not (t < s)


def test_full_contains_minimal():
    fam = frozenset({frozenset({A, B}), frozenset({B, C})})
    assert transversals(fam, "minimal") <= transversals(fam, "full")


def test_every_transversal_hits_every_member():
    fam = frozenset({frozenset({A, B}), frozenset({B, C}), frozenset({A, C})})
    for policy in ("minimal", "full"):
        for t in transversals(fam, policy):
            assert all(t & m for m in fam)


# ---------------------------------------------------------------------------
# swap family

def test_swap_family_pointwise():
    fam = frozenset({frozenset({A})})
    out = swap_family(fam)
    assert out == frozenset({frozenset({Pair(A.base, False)})})


def test_swap_family_mixed_member():
    d = Pair(Complex("c", (), True), True)
    f = Pair(Complex("d", (), True), False)
    fam = frozenset({frozenset({d, f})})
    (member,) = swap_family(fam)
    assert member == frozenset({Pair(d.base, False), Pair(f.base, True)})


@given(
    st.sets(
        st.sets(
            st.builds(
                Pair,
                base=st.builds(
                    Complex,
                    relation=st.sampled_from(["S", "P"]),
                    args=st.sampled_from([(), ("a",)]),
                    positive=st.booleans(),
                ),
                diagonal=st.booleans(),
            ),
            min_size=1,
            max_size=3,
        ).map(frozenset),
        min_size=1,
        max_size=3,
    ).map(frozenset)
)
def test_swap_family_is_an_involution(fam):
    assert swap_family(swap_family(fam)) == fam


# ---------------------------------------------------------------------------
# connective cores

def test_disjoin_unions_members():
    assert disjoin(meaning({A}), meaning({B})) == meaning({A}, {B})


def test_negate_singleton_member_swaps_pointwise():
    m = meaning({A, B})
    assert negate(m) == meaning({Pair(A.base, False)}, {Pair(B.base, True)})


def test_negate_multi_member_swaps_transversals():
    m = meaning({A}, {B})
    assert negate(m) == meaning({Pair(A.base, False), Pair(B.base, True)})


def test_negate_full_policy_keeps_truth():
    m = meaning({A}, {B, C})
    for policy in ("minimal", "full"):
        assert is_true(negate(m, policy)) == (not is_true(m))


_small_meanings = st.sets(
    st.sets(st.sampled_from([A, B, C]), min_size=1, max_size=3).map(frozenset),
    min_size=1,
    max_size=3,
).map(lambda ms: Meaning(frozenset(ms)))


@given(_small_meanings)
@settings(max_examples=200)
def test_negation_flips_truth_under_both_policies(m):
    for policy in ("minimal", "full"):
        assert is_true(negate(m, policy)) == (not is_true(m))


@given(_small_meanings)
@settings(max_examples=200)
def test_double_negation_preserves_truth(m):
    for policy in ("minimal", "full"):
        assert is_true(negate(negate(m, policy), policy)) == is_true(m)


@given(_small_meanings, _small_meanings)
def test_disjunction_truth_is_classical(m1, m2):
    assert is_true(disjoin(m1, m2)) == (is_true(m1) or is_true(m2))


# ---------------------------------------------------------------------------
# member-wise union

def test_memberwise_union_of_singletons():
    d1 = meaning({Pair(Complex("S", ("a",), True), True)})
    d2 = meaning({Pair(Complex("S", ("b",), True), True)})
    assert memberwise_union([d1, d2]) == meaning(
        {Pair(Complex("S", ("a",), True), True), Pair(Complex("S", ("b",), True), True)}
    )


def test_memberwise_union_mixed_tags():
    d1 = meaning({Pair(Complex("S", ("a",), True), True)})
    d2 = meaning({Pair(Complex("S", ("b",), False), False)})
    assert memberwise_union([d1, d2]) == meaning(
        {
            Pair(Complex("S", ("a",), True), True),
            Pair(Complex("S", ("b",), False), False),
        }
    )


def test_memberwise_union_identity_on_one_input():
    m = meaning({A}, {B})
    assert memberwise_union([m]) == m


def test_memberwise_union_requires_matching_counts():
    with pytest.raises(StructureMismatch):
        memberwise_union([meaning({A}), meaning({B}, {C})])


def test_memberwise_union_pads_short_families():
    m = memberwise_union([meaning({A}), meaning({B}, {C})], pad=True)
    assert len(m.members) == 2


def test_memberwise_union_rejects_empty_sequence():
    with pytest.raises(ValueError):
        memberwise_union([])


@given(_small_meanings, _small_meanings)
def test_memberwise_union_is_commutative(m1, m2):
    if len(m1.members) != len(m2.members):
        return
    assert memberwise_union([m1, m2]) == memberwise_union([m2, m1])


# ---------------------------------------------------------------------------
# atoms

def test_atom_for_holding_fact():
    m = atom_meaning(w_two(), "S", ("a",))
    assert m == meaning({Pair(Complex("S", ("a",), True), True)})
    assert is_true(m)


def test_atom_for_failing_fact():
    m = atom_meaning(w_two(), "S", ("b",))
    assert m == meaning({Pair(Complex("S", ("b",), False), False)})
    assert not is_true(m)


def test_atom_for_false_constant():
    w = World(constants=(("P", False),))
    m = atom_meaning(w, "P")
    assert m == meaning({Pair(Complex("P", (), False), False)})
    assert not is_true(m)


def test_atom_meanings_are_grounded():
    w = w_two()
    assert meaning_in_world(atom_meaning(w, "S", ("a",)), w)
    assert meaning_in_world(atom_meaning(w, "S", ("b",)), w)

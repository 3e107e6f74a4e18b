"""Independent classical evaluators and agreement sweeps.

`truth_table_eval` and `tarski_eval` decide formulas the classical way
(boolean recursion, finite-model quantification).  They share the AST
with the meaning evaluators and nothing else, so they can referee them.

`enumerate_formulas` lists formulas exhaustively in a stable order:
by node count, atoms first, then negations, disjunctions and quantified
forms, filtered by depth, quantifier count and node budget.  Exhausting
every formula of a given depth is only feasible for small depths (the
count grows doubly exponentially), so deeper sweeps set `max_size` to
bound the node count instead; the default budget is the full-tree size
2^(depth+1) - 1, which is exact for depth <= 2 and must be lowered for
more.

`check_equivalence` sweeps formulas against assignments/worlds and
reports every point where the meaning evaluators and the classical
evaluators disagree, and every point where the two transversal policies
disagree with each other.  Reports are deterministic and JSON-ready.
"""
from __future__ import annotations

from dataclasses import dataclass, field, asdict

from .fosem import default_binding, enumerate_worlds, eval_fo
from .meanings import is_true
from .ontology import World
from .propsem import PropAssignment, enumerate_assignments, eval_prop
from .syntax import (
    Exists,
    ForAll,
    Formula,
    Not,
    Or,
    PredApp,
    PropVar,
    free_variables,
    predicates,
    print_formula,
    prop_variables,
)

__all__ = [
    "Disagreement",
    "EquivalenceReport",
    "SweepConfig",
    "TarskiModel",
    "check_equivalence",
    "enumerate_formulas",
    "formula_depth",
    "model_from_world",
    "quantifier_count",
    "tarski_eval",
    "truth_table_eval",
]


# ---------------------------------------------------------------------------
# classical evaluators

def truth_table_eval(f: Formula, valuation: dict[str, bool]) -> bool:
    """Classical boolean value of a propositional formula."""
    if isinstance(f, PropVar):
        try:
            return valuation[f.name]
        except KeyError:
            raise ValueError(f"valuation does not cover {f.name}") from None
    if isinstance(f, Not):
        return not truth_table_eval(f.operand, valuation)
    if isinstance(f, Or):
        return truth_table_eval(f.left, valuation) or truth_table_eval(f.right, valuation)
    raise ValueError("truth_table_eval takes propositional formulas")


@dataclass
class TarskiModel:
    domain: tuple[str, ...]
    facts: frozenset[tuple[str, tuple[str, ...]]]
    prop_values: dict[str, bool]


def model_from_world(w: World) -> TarskiModel:
    return TarskiModel(
        domain=w.individuals,
        facts=w.facts,
        prop_values={name: value for name, value in w.constants},
    )


def tarski_eval(
    f: Formula,
    model: TarskiModel,
    env: dict[str, str] | None = None,
    valuation: dict[str, bool] | None = None,
) -> bool:
    """Classical satisfaction over a finite model."""
    env = env or {}
    if isinstance(f, PropVar):
        if valuation is not None and f.name in valuation:
            return valuation[f.name]
        raise ValueError(f"no truth value for propositional variable {f.name}")
    if isinstance(f, PredApp):
        if f.argument not in env:
            raise ValueError(f"unbound individual variable {f.argument}")
        return (f.predicate, (env[f.argument],)) in model.facts
    if isinstance(f, Not):
        return not tarski_eval(f.operand, model, env, valuation)
    if isinstance(f, Or):
        return tarski_eval(f.left, model, env, valuation) or tarski_eval(
            f.right, model, env, valuation
        )
    if isinstance(f, ForAll):
        return all(
            tarski_eval(f.body, model, {**env, f.variable: d}, valuation)
            for d in model.domain
        )
    if isinstance(f, Exists):
        return any(
            tarski_eval(f.body, model, {**env, f.variable: d}, valuation)
            for d in model.domain
        )
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# formula enumeration

def formula_depth(f: Formula) -> int:
    if isinstance(f, (PropVar, PredApp)):
        return 0
    if isinstance(f, Not):
        return 1 + formula_depth(f.operand)
    if isinstance(f, Or):
        return 1 + max(formula_depth(f.left), formula_depth(f.right))
    if isinstance(f, (ForAll, Exists)):
        return 1 + formula_depth(f.body)
    raise TypeError(f"not a formula: {f!r}")


def quantifier_count(f: Formula) -> int:
    if isinstance(f, (PropVar, PredApp)):
        return 0
    if isinstance(f, Not):
        return quantifier_count(f.operand)
    if isinstance(f, Or):
        return quantifier_count(f.left) + quantifier_count(f.right)
    if isinstance(f, (ForAll, Exists)):
        return 1 + quantifier_count(f.body)
    raise TypeError(f"not a formula: {f!r}")


def enumerate_formulas(
    prop_vars=(),
    predicate_names=(),
    ind_vars=("x", "y"),
    max_depth: int = 2,
    max_quantifiers: int = 0,
    max_size: int | None = None,
    closed_only: bool = False,
) -> list[Formula]:
    """All distinct formulas within the depth/quantifier/size bounds.

    Stable order: node count ascending; within one size, atoms, then
    negations, then disjunctions by split point, then quantified forms.
    """
    if max_size is None:
        max_size = 2 ** (max_depth + 1) - 1
    atoms: list[Formula] = [PropVar(v) for v in prop_vars]
    atoms += [PredApp(p, v) for p in predicate_names for v in ind_vars]
    depths: dict[Formula, int] = {a: 0 for a in atoms}
    quants: dict[Formula, int] = {a: 0 for a in atoms}
    by_size: dict[int, list[Formula]] = {1: list(atoms)}

    def admit(bucket, f, depth, quant):
        if depth > max_depth or quant > max_quantifiers or f in depths:
            return
        depths[f] = depth
        quants[f] = quant
        bucket.append(f)

    for n in range(2, max_size + 1):
        bucket: list[Formula] = []
        for g in by_size.get(n - 1, []):
            admit(bucket, Not(g), depths[g] + 1, quants[g])
        for left_size in range(1, n - 1):
            for left in by_size.get(left_size, []):
                for right in by_size.get(n - 1 - left_size, []):
                    admit(
                        bucket,
                        Or(left, right),
                        max(depths[left], depths[right]) + 1,
                        quants[left] + quants[right],
                    )
        if max_quantifiers > 0:
            for g in by_size.get(n - 1, []):
                for v in ind_vars:
                    admit(bucket, ForAll(v, g), depths[g] + 1, quants[g] + 1)
                    admit(bucket, Exists(v, g), depths[g] + 1, quants[g] + 1)
        by_size[n] = bucket

    out: list[Formula] = []
    for n in range(1, max_size + 1):
        for f in by_size.get(n, []):
            if closed_only and free_variables(f):
                continue
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# agreement sweeps

@dataclass
class SweepConfig:
    prop_vars: tuple[str, ...] = ("p", "q", "r")
    max_depth: int = 2
    max_size: int | None = None
    policies: tuple[str, ...] = ("minimal", "full")
    mode: str = "canonical"
    seed: int | None = None
    count: int | None = None
    size_bound: int = 3
    include_prop: bool = True
    include_fo: bool = False
    fo_predicates: tuple[str, ...] = ("S",)
    fo_prop_vars: tuple[str, ...] = ()
    fo_ind_vars: tuple[str, ...] = ("x", "y")
    fo_max_depth: int = 4
    fo_max_quantifiers: int = 2
    fo_max_size: int = 6
    fo_max_individuals: int = 3

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Disagreement:
    section: str  # prop | fo | policy
    formula: str
    context: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return asdict(self)


_REPORT_WITNESS_CAP = 25


@dataclass
class EquivalenceReport:
    config: SweepConfig
    prop_formulas: int = 0
    prop_checks: int = 0
    fo_formulas: int = 0
    fo_checks: int = 0
    disagreement_count: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.disagreement_count == 0

    def record(self, d: Disagreement) -> None:
        self.disagreement_count += 1
        if len(self.disagreements) < _REPORT_WITNESS_CAP:
            self.disagreements.append(d)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "prop_formulas": self.prop_formulas,
            "prop_checks": self.prop_checks,
            "fo_formulas": self.fo_formulas,
            "fo_checks": self.fo_checks,
            "disagreement_count": self.disagreement_count,
            "disagreements": [d.to_dict() for d in self.disagreements],
            "verdict": "PASS" if self.ok else "FAIL",
        }

    def to_text(self) -> str:
        lines = ["equivalence sweep"]
        mode = f"  mode: {self.config.mode}"
        if self.config.mode == "sampled":
            mode += f" (seed={self.config.seed}, count={self.config.count})"
        lines.append(mode)
        if self.config.include_prop:
            lines.append(
                f"  propositional: {self.prop_formulas} formulas, "
                f"{self.prop_checks} checks"
            )
        if self.config.include_fo:
            lines.append(
                f"  quantified: {self.fo_formulas} formulas, {self.fo_checks} checks"
            )
        lines.append(f"  policies: {', '.join(self.config.policies)}")
        lines.append(f"  disagreements: {self.disagreement_count}")
        for d in self.disagreements:
            lines.append(
                f"    [{d.section}] {d.formula} | {d.context} | "
                f"expected {d.expected}, got {d.got}"
            )
        lines.append(f"  verdict: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def describe_world(w: World) -> str:
    facts = ", ".join(f"{r}({','.join(a)})" for r, a in sorted(w.facts)) or "none"
    consts = ", ".join(f"{n}={'true' if v else 'false'}" for n, v in w.constants)
    parts = [f"individuals {{{', '.join(w.individuals)}}}", f"facts {{{facts}}}"]
    if consts:
        parts.append(consts)
    return "; ".join(parts)


def check_equivalence(config: SweepConfig, prop_eval=None, fo_eval=None) -> EquivalenceReport:
    """Sweep the meaning evaluators against the classical oracles."""
    prop_eval = prop_eval or eval_prop
    fo_eval = fo_eval or eval_fo
    report = EquivalenceReport(config=config)

    if config.include_prop:
        formulas = enumerate_formulas(
            prop_vars=config.prop_vars,
            max_depth=config.max_depth,
            max_size=config.max_size,
        )
        report.prop_formulas = len(formulas)
        assignments = enumerate_assignments(
            config.prop_vars,
            None,
            config.mode,
            seed=config.seed,
            count=config.count,
            size_bound=config.size_bound,
        )
        for f in formulas:
            text = print_formula(f)
            for idx, h in enumerate(assignments):
                expected = truth_table_eval(f, h.truths())
                got = {}
                for policy in config.policies:
                    report.prop_checks += 1
                    got[policy] = is_true(prop_eval(f, h, policy))
                    if got[policy] != expected:
                        report.record(
                            Disagreement(
                                section="prop",
                                formula=text,
                                context=f"assignment {idx}: {h.describe() or 'empty'}",
                                expected=str(expected).lower(),
                                got=f"{policy}: {str(got[policy]).lower()}",
                            )
                        )
                if len(set(got.values())) > 1:
                    report.record(
                        Disagreement(
                            section="policy",
                            formula=text,
                            context=f"assignment {idx}: {h.describe() or 'empty'}",
                            expected="policy-independent truth",
                            got=str(
                                {k: str(v).lower() for k, v in sorted(got.items())}
                            ),
                        )
                    )

    if config.include_fo:
        formulas = enumerate_formulas(
            prop_vars=config.fo_prop_vars,
            predicate_names=config.fo_predicates,
            ind_vars=config.fo_ind_vars,
            max_depth=config.fo_max_depth,
            max_quantifiers=config.fo_max_quantifiers,
            max_size=config.fo_max_size,
            closed_only=True,
        )
        report.fo_formulas = len(formulas)
        for f in formulas:
            text = print_formula(f)
            pvars = sorted(prop_variables(f))
            preds = sorted(predicates(f)) or ["S"]
            worlds = enumerate_worlds(preds, pvars, config.fo_max_individuals)
            for w in worlds:
                model = model_from_world(w)
                binding = default_binding(w)
                if pvars:
                    assignments = enumerate_assignments(
                        pvars,
                        w,
                        config.mode,
                        seed=config.seed,
                        count=config.count,
                        size_bound=config.size_bound,
                    )
                else:
                    assignments = [PropAssignment(values={}, world=w)]
                for h in assignments:
                    expected = tarski_eval(f, model, None, h.truths())
                    got = {}
                    for policy in config.policies:
                        report.fo_checks += 1
                        got[policy] = is_true(fo_eval(f, binding, h, policy))
                        if got[policy] != expected:
                            report.record(
                                Disagreement(
                                    section="fo",
                                    formula=text,
                                    context=f"{describe_world(w)}; {h.describe() or 'no variables'}",
                                    expected=str(expected).lower(),
                                    got=f"{policy}: {str(got[policy]).lower()}",
                                )
                            )
                    if len(set(got.values())) > 1:
                        report.record(
                            Disagreement(
                                section="policy",
                                formula=text,
                                context=describe_world(w),
                                expected="policy-independent truth",
                                got=str(
                                    {k: str(v).lower() for k, v in sorted(got.items())}
                                ),
                            )
                        )
    return report

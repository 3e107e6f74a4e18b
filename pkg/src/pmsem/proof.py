"""Hilbert-style proof scripts over the five disjunction/negation axioms.

Axiom schemas (in sugared form; everything is desugared to ~ and v):

    Taut   (p v p) => p
    Add    q => (p v q)
    Perm   (p v q) => (q v p)
    Assoc  (p v (q v r)) => (q v (p v r))
    Sum    (q => r) => ((p v q) => (p v r))

A script is a sequence of lines

    LABEL formula ; AX NAME var=formula, var=formula, ...
    LABEL formula ; MP MAJOR MINOR
    LABEL formula ; SUB SOURCE var=formula, ...

Blank lines and '#' comments are skipped.  AX instantiates a schema
(the substitution must cover all its variables), MP detaches: from
~X v Y and X infer Y, SUB applies a simultaneous substitution of
formulas for propositional variables to an earlier line.  Labels must
refer to earlier lines.

`check_proof` validates every line structurally and, unless disabled,
also confirms each line is a tautology.  Checking stops classifying
after the first invalid line; later lines are reported unchecked.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .propsem import classify
from .syntax import (
    Exists,
    ForAll,
    Formula,
    FormulaSyntaxError,
    Not,
    Or,
    PredApp,
    PropVar,
    parse,
    print_formula,
    prop_variables,
)

__all__ = [
    "AXIOMS",
    "AxiomStep",
    "LineVerdict",
    "MpStep",
    "ProofError",
    "ProofLine",
    "ProofReport",
    "ProofScript",
    "SubstStep",
    "apply_mp",
    "apply_substitution",
    "axiom_instance",
    "check_proof",
    "load_script",
    "parse_script",
]


class ProofError(ValueError):
    """Raised for malformed proof scripts or inapplicable rules."""


AXIOMS: dict[str, Formula] = {
    "Taut": parse("(p v p) => p"),
    "Add": parse("q => (p v q)"),
    "Perm": parse("(p v q) => (q v p)"),
    "Assoc": parse("(p v (q v r)) => (q v (p v r))"),
    "Sum": parse("(q => r) => ((p v q) => (p v r))"),
}


def apply_substitution(f: Formula, mapping: dict[str, Formula]) -> Formula:
    """Simultaneous substitution of formulas for propositional variables."""
    if isinstance(f, PropVar):
        return mapping.get(f.name, f)
    if isinstance(f, PredApp):
        return f
    if isinstance(f, Not):
        return Not(apply_substitution(f.operand, mapping))
    if isinstance(f, Or):
        return Or(
            apply_substitution(f.left, mapping), apply_substitution(f.right, mapping)
        )
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.variable, apply_substitution(f.body, mapping))
    raise TypeError(f"not a formula: {f!r}")


def axiom_instance(name: str, mapping: dict[str, Formula]) -> Formula:
    if name not in AXIOMS:
        raise ProofError(f"unknown axiom {name!r}")
    schema = AXIOMS[name]
    missing = sorted(prop_variables(schema) - set(mapping))
    if missing:
        raise ProofError(f"substitution for axiom {name} must cover {missing}")
    return apply_substitution(schema, mapping)


def apply_mp(major: Formula, minor: Formula) -> Formula:
    """Detach: from ~X v Y and X, infer Y."""
    if not (isinstance(major, Or) and isinstance(major.left, Not)):
        raise ProofError("major premiss is not a conditional")
    if major.left.operand != minor:
        raise ProofError(
            f"antecedent {print_formula(major.left.operand)} does not match "
            f"minor premiss {print_formula(minor)}"
        )
    return major.right


# ---------------------------------------------------------------------------
# scripts

@dataclass(frozen=True)
class AxiomStep:
    name: str
    mapping: tuple[tuple[str, Formula], ...]


@dataclass(frozen=True)
class MpStep:
    major: str
    minor: str


@dataclass(frozen=True)
class SubstStep:
    source: str
    mapping: tuple[tuple[str, Formula], ...]


@dataclass(frozen=True)
class ProofLine:
    label: str
    formula: Formula
    justification: AxiomStep | MpStep | SubstStep
    lineno: int


@dataclass(frozen=True)
class ProofScript:
    lines: tuple[ProofLine, ...]


def _parse_mapping(text: str, where: str) -> tuple[tuple[str, Formula], ...]:
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ProofError(f"{where}: empty substitution entry")
        var, eq, formula_text = chunk.partition("=")
        var = var.strip()
        if not eq or not formula_text.strip():
            raise ProofError(f"{where}: expected var=formula, got {chunk!r}")
        try:
            entries.append((var, parse(formula_text)))
        except FormulaSyntaxError as exc:
            raise ProofError(f"{where}: {exc}") from None
    return tuple(entries)


def parse_script(text: str, source: str = "<script>") -> ProofScript:
    lines: list[ProofLine] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        where = f"{source}:{lineno}"
        head, sep, just_text = stripped.partition(";")
        if not sep:
            raise ProofError(f"{where}: missing '; JUSTIFICATION'")
        head = head.strip()
        label, _, formula_text = head.partition(" ")
        if not label or not formula_text.strip():
            raise ProofError(f"{where}: expected 'LABEL formula'")
        if label in seen:
            raise ProofError(f"{where}: duplicate label {label}")
        try:
            formula = parse(formula_text)
        except FormulaSyntaxError as exc:
            raise ProofError(f"{where}: {exc}") from None
        just_parts = just_text.strip().split(None, 1)
        if not just_parts:
            raise ProofError(f"{where}: empty justification")
        keyword = just_parts[0].upper()
        rest = just_parts[1] if len(just_parts) > 1 else ""
        if keyword == "AX":
            name, _, mapping_text = rest.strip().partition(" ")
            if not name:
                raise ProofError(f"{where}: AX needs an axiom name")
            mapping = _parse_mapping(mapping_text, where) if mapping_text.strip() else ()
            just: AxiomStep | MpStep | SubstStep = AxiomStep(name, mapping)
        elif keyword == "MP":
            refs = rest.split()
            if len(refs) != 2:
                raise ProofError(f"{where}: MP takes two labels")
            just = MpStep(refs[0], refs[1])
        elif keyword == "SUB":
            source_label, _, mapping_text = rest.strip().partition(" ")
            if not source_label or not mapping_text.strip():
                raise ProofError(f"{where}: SUB takes a label and a substitution")
            just = SubstStep(source_label, _parse_mapping(mapping_text, where))
        else:
            raise ProofError(f"{where}: unknown justification {keyword!r}")
        lines.append(ProofLine(label, formula, just, lineno))
        seen.add(label)
    if not lines:
        raise ProofError(f"{source}: empty script")
    return ProofScript(lines=tuple(lines))


def load_script(path: str) -> ProofScript:
    with open(path, encoding="utf-8") as fh:
        return parse_script(fh.read(), source=path)


# ---------------------------------------------------------------------------
# checking

@dataclass
class LineVerdict:
    label: str
    formula: str
    status: str  # valid | invalid | unchecked
    reason: str = ""
    tautology: bool | None = None


@dataclass
class ProofReport:
    valid: bool
    lines: list[LineVerdict] = field(default_factory=list)

    def first_invalid(self) -> LineVerdict | None:
        for lv in self.lines:
            if lv.status == "invalid":
                return lv
        return None

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "lines": [
                {
                    "label": lv.label,
                    "formula": lv.formula,
                    "status": lv.status,
                    "reason": lv.reason,
                    "tautology": lv.tautology,
                }
                for lv in self.lines
            ],
        }

    def to_text(self) -> str:
        out = []
        for lv in self.lines:
            mark = {"valid": "ok", "invalid": "FAIL", "unchecked": "--"}[lv.status]
            taut = ""
            if lv.tautology is not None:
                taut = " [tautology]" if lv.tautology else " [NOT A TAUTOLOGY]"
            reason = f" ({lv.reason})" if lv.reason else ""
            out.append(f"{lv.label:>4} {mark:<4} {lv.formula}{taut}{reason}")
        out.append("proof valid" if self.valid else "proof INVALID")
        return "\n".join(out)


def check_proof(
    script: ProofScript, policy: str = "minimal", semantic: bool = True
) -> ProofReport:
    """Check every line's justification; optionally classify each line.

    After the first invalid line the remaining lines are reported
    unchecked, since their references may depend on the broken line.
    """
    report = ProofReport(valid=True)
    derived: dict[str, Formula] = {}
    broken = False
    for line in script.lines:
        text = print_formula(line.formula)
        if broken:
            report.lines.append(LineVerdict(line.label, text, "unchecked"))
            continue
        try:
            expected = _expected_formula(line, derived)
        except ProofError as exc:
            report.valid = False
            broken = True
            report.lines.append(LineVerdict(line.label, text, "invalid", str(exc)))
            continue
        if expected != line.formula:
            report.valid = False
            broken = True
            report.lines.append(
                LineVerdict(
                    line.label,
                    text,
                    "invalid",
                    f"justification derives {print_formula(expected)}",
                )
            )
            continue
        verdict = LineVerdict(line.label, text, "valid")
        if semantic:
            try:
                verdict.tautology = classify(line.formula, policy=policy).kind == "tautology"
            except ValueError as exc:
                verdict.tautology = False
                verdict.reason = f"not classifiable: {exc}"
            if not verdict.tautology:
                report.valid = False
                broken = True
                verdict.status = "invalid"
                verdict.reason = verdict.reason or "line is not a tautology"
        report.lines.append(verdict)
        if verdict.status == "valid":
            derived[line.label] = line.formula
    return report


def _expected_formula(line: ProofLine, derived: dict[str, Formula]) -> Formula:
    just = line.justification
    if isinstance(just, AxiomStep):
        return axiom_instance(just.name, dict(just.mapping))
    if isinstance(just, MpStep):
        major = _lookup(just.major, derived)
        minor = _lookup(just.minor, derived)
        return apply_mp(major, minor)
    if isinstance(just, SubstStep):
        return apply_substitution(_lookup(just.source, derived), dict(just.mapping))
    raise TypeError(f"unknown justification {just!r}")


def _lookup(label: str, derived: dict[str, Formula]) -> Formula:
    if label not in derived:
        raise ProofError(f"label {label} does not refer to an earlier valid line")
    return derived[label]

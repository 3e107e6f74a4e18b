"""Batch command line front end.

    pm parse "p v q .=>. q v p"
    pm eval "~(p v q)" --policy full
    pm taut "p v ~p"
    pm fo-eval "(x). S(x)" --model world.txt
    pm fo-valid "(x). S(x) v ~S(x)"
    pm compare --vars 3 --prop-depth 2 --fo
    pm check-proof proofs/valid/imp_self.proof

Exit codes: 0 success or positive verdict, 1 negative semantic verdict
(not a tautology, formula false, not logically valid, disagreements
found, proof invalid), 2 usage or input error.

Reports are plain text on stdout; --json switches to a stable JSON
schema and --out redirects to a file.  Sampled modes require --seed and
report it, so identical invocations give byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys

from .fosem import default_binding, eval_fo, logical_truth
from .meanings import is_true, render_meaning
from .ontology import WorldError, load_world
from .oracle import SweepConfig, check_equivalence, describe_world
from .proof import ProofError, check_proof, load_script
from .propsem import (
    classify,
    declared_assignment,
    enumerate_assignments,
    eval_prop,
)
from .syntax import (
    FormulaSyntaxError,
    free_variables,
    parse,
    predicates,
    print_formula,
    prop_variables,
)

__all__ = ["main"]

_PROP_NAMES = ("p", "q", "r", "s", "t", "u", "v", "w")


def _add_policy(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--policy",
        choices=("minimal", "full"),
        default="minimal",
        help="transversal policy used by negation (default: minimal)",
    )


def _add_enumeration(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--mode",
        choices=("canonical", "sampled"),
        default="canonical",
        help="assignment enumeration mode (default: canonical)",
    )
    p.add_argument("--seed", type=int, help="RNG seed (required in sampled mode)")
    p.add_argument("--count", type=int, help="number of sampled assignments")
    p.add_argument(
        "--size-bound",
        type=int,
        default=3,
        help="member/size bound for sampled Meanings (default: 3)",
    )


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--out", help="write the report to a file instead of stdout")


def _emit(args: argparse.Namespace, text: str) -> None:
    data = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _parse_base_mode(text: str) -> tuple[str, str | None]:
    if text == "all":
        return "all", None
    kind, sep, var = text.partition(":")
    if kind == "any" and sep and var:
        return "any", var
    raise ValueError(f"base mode must be 'all' or 'any:<var>', got {text!r}")


def _load_model(args: argparse.Namespace):
    path = getattr(args, "model", None) or getattr(args, "world", None)
    if path is None:
        raise ValueError("a world file is required (--model PATH)")
    return load_world(path)


# ---------------------------------------------------------------------------
# subcommands

def cmd_parse(args: argparse.Namespace) -> int:
    f = parse(args.formula)
    if args.json:
        _emit(args, _dumps({
            "input": args.formula,
            "canonical": print_formula(f),
            "prop_variables": sorted(prop_variables(f)),
            "predicates": sorted(predicates(f)),
            "free_variables": sorted(free_variables(f)),
        }))
    else:
        _emit(args, print_formula(f))
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    f = parse(args.formula)
    world = load_world(args.world) if args.world else None
    assignments = enumerate_assignments(
        prop_variables(f),
        world,
        args.mode,
        seed=args.seed,
        count=args.count,
        size_bound=args.size_bound,
    )
    rows = []
    for h in assignments:
        m = eval_prop(f, h, args.policy)
        rows.append((h.describe() or "empty", is_true(m), render_meaning(m)))
    if args.json:
        _emit(args, _dumps({
            "formula": print_formula(f),
            "policy": args.policy,
            "mode": args.mode,
            "seed": args.seed,
            "count": args.count,
            "assignments": [
                {"assignment": d, "true": t, "meaning": r} for d, t, r in rows
            ],
        }))
    else:
        lines = [f"formula {print_formula(f)}", f"policy {args.policy}"]
        mode = f"mode {args.mode}"
        if args.mode == "sampled":
            mode += f" (seed={args.seed}, count={args.count})"
        lines.append(mode)
        for d, t, r in rows:
            lines.append(f"{d} | {'true' if t else 'false'} | {r}")
        _emit(args, "\n".join(lines))
    return 0


def cmd_taut(args: argparse.Namespace) -> int:
    f = parse(args.formula)
    world = load_world(args.world) if args.world else None
    verdict = classify(
        f,
        world,
        args.mode,
        args.policy,
        seed=args.seed,
        count=args.count,
        size_bound=args.size_bound,
    )
    if args.json:
        _emit(args, _dumps({
            "formula": print_formula(f),
            "verdict": verdict.kind,
            "policy": args.policy,
            "mode": args.mode,
            "seed": args.seed,
            "assignments_checked": verdict.assignments_checked,
            "witness_true": verdict.witness_true.describe() if verdict.witness_true else None,
            "witness_false": verdict.witness_false.describe() if verdict.witness_false else None,
        }))
    else:
        lines = [verdict.kind]
        if verdict.kind == "contingent":
            lines.append(f"  true under {verdict.witness_true.describe() or 'empty'}")
            lines.append(f"  false under {verdict.witness_false.describe() or 'empty'}")
        _emit(args, "\n".join(lines))
    return 0 if verdict.kind == "tautology" else 1


def cmd_fo_eval(args: argparse.Namespace) -> int:
    f = parse(args.formula)
    world = _load_model(args)
    base_mode, any_variable = _parse_base_mode(args.base_mode)
    binding = default_binding(world)
    pvars = prop_variables(f)
    assignment = declared_assignment(pvars, world) if pvars else None
    m = eval_fo(f, binding, assignment, args.policy, base_mode, any_variable)
    truth = is_true(m)
    if args.json:
        _emit(args, _dumps({
            "formula": print_formula(f),
            "world": describe_world(world),
            "base_mode": args.base_mode,
            "policy": args.policy,
            "true": truth,
            "meaning": render_meaning(m),
        }))
    else:
        _emit(args, "\n".join([
            f"formula {print_formula(f)}",
            f"world {describe_world(world)}",
            f"{'true' if truth else 'false'} | {render_meaning(m)}",
        ]))
    return 0 if truth else 1


def cmd_fo_valid(args: argparse.Namespace) -> int:
    f = parse(args.formula)
    verdict = logical_truth(
        f,
        max_individuals=args.max_individuals,
        policy=args.policy,
        mode=args.mode,
        seed=args.seed,
        count=args.count,
        size_bound=args.size_bound,
    )
    valid = verdict.kind == "logical_truth"
    witness = None
    if verdict.witness_world is not None:
        witness = describe_world(verdict.witness_world)
        if verdict.witness_assignment is not None and verdict.witness_assignment.values:
            witness += f"; {verdict.witness_assignment.describe()}"
    if args.json:
        _emit(args, _dumps({
            "formula": print_formula(f),
            "verdict": verdict.kind,
            "worlds_checked": verdict.worlds_checked,
            "max_individuals": args.max_individuals,
            "policy": args.policy,
            "witness": witness,
        }))
    else:
        lines = [f"{verdict.kind} ({verdict.worlds_checked} worlds checked)"]
        if witness:
            lines.append(f"  false in {witness}")
        _emit(args, "\n".join(lines))
    return 0 if valid else 1


def cmd_compare(args: argparse.Namespace) -> int:
    if args.vars < 0 or args.vars > len(_PROP_NAMES):
        raise ValueError(f"--vars must be between 0 and {len(_PROP_NAMES)}")
    prop_size = args.prop_size
    if prop_size is None and args.prop_depth > 2:
        prop_size = 7
    policies = ("minimal", "full") if args.policy == "both" else (args.policy,)
    config = SweepConfig(
        prop_vars=_PROP_NAMES[: args.vars],
        max_depth=args.prop_depth,
        max_size=prop_size,
        policies=policies,
        mode=args.mode,
        seed=args.seed,
        count=args.count,
        size_bound=args.size_bound,
        include_prop=not args.no_prop,
        include_fo=args.fo,
        fo_predicates=tuple(args.fo_predicates.split(",")) if args.fo_predicates else (),
        fo_prop_vars=tuple(v for v in args.fo_prop_vars.split(",") if v),
        fo_ind_vars=tuple(args.fo_ind_vars.split(",")),
        fo_max_depth=args.fo_depth,
        fo_max_quantifiers=args.fo_quantifiers,
        fo_max_size=args.fo_size,
        fo_max_individuals=args.fo_individuals,
    )
    report = check_equivalence(config)
    _emit(args, _dumps(report.to_dict()) if args.json else report.to_text())
    return 0 if report.ok else 1


def cmd_check_proof(args: argparse.Namespace) -> int:
    script = load_script(args.path)
    report = check_proof(script, policy=args.policy, semantic=not args.no_semantic)
    _emit(args, _dumps(report.to_dict()) if args.json else report.to_text())
    return 0 if report.valid else 1


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pm",
        description="Evaluate dot-notation formulas as Meanings and check them "
        "against classical oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a formula and print it canonically")
    p.add_argument("formula")
    _add_output(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("eval", help="print the Meaning of a propositional formula")
    p.add_argument("formula")
    p.add_argument("--world", help="world file declaring propositional constants")
    _add_policy(p)
    _add_enumeration(p)
    _add_output(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("taut", help="classify a propositional formula")
    p.add_argument("formula")
    p.add_argument("--world", help="world file declaring propositional constants")
    _add_policy(p)
    _add_enumeration(p)
    _add_output(p)
    p.set_defaults(func=cmd_taut)

    p = sub.add_parser("fo-eval", help="evaluate a monadic formula in one world")
    p.add_argument("formula")
    p.add_argument("--model", help="world file (individuals, relations, facts)")
    p.add_argument("--world", help="alias for --model")
    p.add_argument(
        "--base-mode",
        default="all",
        help="free-variable base case: 'all' or 'any:<var>' (default: all)",
    )
    _add_policy(p)
    _add_output(p)
    p.set_defaults(func=cmd_fo_eval)

    p = sub.add_parser("fo-valid", help="sweep finite worlds for logical truth")
    p.add_argument("formula")
    p.add_argument(
        "--max-individuals",
        type=int,
        default=3,
        help="largest world domain swept (default: 3)",
    )
    _add_policy(p)
    _add_enumeration(p)
    _add_output(p)
    p.set_defaults(func=cmd_fo_valid)

    p = sub.add_parser("compare", help="sweep evaluators against classical oracles")
    p.add_argument("--vars", type=int, default=3, help="propositional variables (default: 3)")
    p.add_argument("--prop-depth", type=int, default=2, help="connective depth bound (default: 2)")
    p.add_argument(
        "--prop-size",
        type=int,
        help="node budget; defaults to the full-tree size for depth <= 2, else 7",
    )
    p.add_argument("--no-prop", action="store_true", help="skip the propositional sweep")
    p.add_argument("--fo", action="store_true", help="also sweep quantified formulas")
    p.add_argument("--fo-predicates", default="S", help="comma-separated predicates (default: S)")
    p.add_argument("--fo-prop-vars", default="", help="comma-separated propositional variables")
    p.add_argument("--fo-ind-vars", default="x,y", help="comma-separated individual variables")
    p.add_argument("--fo-depth", type=int, default=4, help="quantified depth bound (default: 4)")
    p.add_argument("--fo-quantifiers", type=int, default=2, help="quantifier bound (default: 2)")
    p.add_argument("--fo-size", type=int, default=6, help="quantified node budget (default: 6)")
    p.add_argument(
        "--fo-individuals",
        type=int,
        default=3,
        help="largest world domain swept (default: 3)",
    )
    p.add_argument(
        "--policy",
        choices=("minimal", "full", "both"),
        default="both",
        help="transversal policies to sweep (default: both)",
    )
    _add_enumeration(p)
    _add_output(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("check-proof", help="check a Hilbert-style proof script")
    p.add_argument("path")
    p.add_argument(
        "--no-semantic",
        action="store_true",
        help="skip the per-line tautology check",
    )
    _add_policy(p)
    _add_output(p)
    p.set_defaults(func=cmd_check_proof)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (FormulaSyntaxError, WorldError, ProofError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

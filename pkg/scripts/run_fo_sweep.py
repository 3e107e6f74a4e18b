"""Sweep quantified formulas against finite-model satisfaction.

Enumerates closed monadic formulas within the bounds, evaluates each in
every world up to the domain cap (and under every canonical assignment
when propositional variables are mixed in), and prints the agreement
report.

    python3 scripts/run_fo_sweep.py
    python3 scripts/run_fo_sweep.py --predicates S,R --individuals 2
    python3 scripts/run_fo_sweep.py --prop-vars p --size 6
"""
import argparse
import json
import sys
import time

from pmsem.oracle import SweepConfig, check_equivalence


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--predicates", default="S", help="comma-separated (default S)")
    ap.add_argument("--prop-vars", default="", help="comma-separated (default none)")
    ap.add_argument("--ind-vars", default="x,y", help="comma-separated (default x,y)")
    ap.add_argument("--depth", type=int, default=4, help="connective depth bound (default 4)")
    ap.add_argument("--quantifiers", type=int, default=2, help="quantifier bound (default 2)")
    ap.add_argument("--size", type=int, default=6, help="node budget (default 6)")
    ap.add_argument("--individuals", type=int, default=3, help="largest domain (default 3)")
    ap.add_argument("--json", action="store_true", help="print the JSON report")
    args = ap.parse_args()

    config = SweepConfig(
        include_prop=False,
        include_fo=True,
        fo_predicates=tuple(args.predicates.split(",")),
        fo_prop_vars=tuple(v for v in args.prop_vars.split(",") if v),
        fo_ind_vars=tuple(args.ind_vars.split(",")),
        fo_max_depth=args.depth,
        fo_max_quantifiers=args.quantifiers,
        fo_max_size=args.size,
        fo_max_individuals=args.individuals,
    )
    start = time.monotonic()
    report = check_equivalence(config)
    elapsed = time.monotonic() - start
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(report.to_text())
        print(f"  elapsed: {elapsed:.2f}s")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())

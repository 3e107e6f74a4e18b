"""Sweep propositional formulas against the truth-table oracle.

Enumerates every formula over the chosen variables within the depth and
node bounds, evaluates each under every canonical assignment with both
transversal policies, and prints the agreement report.

    python3 scripts/run_prop_sweep.py
    python3 scripts/run_prop_sweep.py --vars 3 --depth 5 --size 7
    python3 scripts/run_prop_sweep.py --mode sampled --seed 7 --count 20
"""
import argparse
import json
import sys
import time

from pmsem.oracle import SweepConfig, check_equivalence

VAR_NAMES = ("p", "q", "r", "s", "t", "u")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vars", type=int, default=3, help="number of variables (default 3)")
    ap.add_argument("--depth", type=int, default=2, help="connective depth bound (default 2)")
    ap.add_argument("--size", type=int, help="node budget (default: full tree for the depth)")
    ap.add_argument("--mode", choices=("canonical", "sampled"), default="canonical")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--count", type=int)
    ap.add_argument("--size-bound", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print the JSON report")
    args = ap.parse_args()

    if args.vars < 1 or args.vars > len(VAR_NAMES):
        ap.error(f"--vars must be between 1 and {len(VAR_NAMES)}")

    config = SweepConfig(
        prop_vars=VAR_NAMES[: args.vars],
        max_depth=args.depth,
        max_size=args.size,
        mode=args.mode,
        seed=args.seed,
        count=args.count,
        size_bound=args.size_bound,
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

#!/usr/bin/env python3
"""Run every built-in check on a corpus and print one line per check, plus
the largest vp/vp- ratio seen.

    python scripts/census_sweep.py --corpus "n<=7"
"""

import argparse

from vertexpos.theorems import builtin_checks, ratio_summary, run_check


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--corpus", default="n<=7")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for check in builtin_checks():
        rep = run_check(check, args.corpus, seed=args.seed)
        status = "ok" if rep.ok else "FAIL"
        print(f"{check.id:28s} {status:4s} tested={rep.tested:6d} skipped={rep.skipped:6d} cex={len(rep.counterexamples)}")
    info = ratio_summary(args.corpus, args.seed)
    print(f"max vp/vp- = {info['max_ratio']} at {info['graph6']}")


if __name__ == "__main__":
    main()

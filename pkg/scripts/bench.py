#!/usr/bin/env python3
"""Time solve_all on G(n, p) and on constant average degree graphs, and fit
log-log slopes against n and n*m.

    python scripts/bench.py
    python scripts/bench.py --sizes 250,500,1000 --seed 3
"""

import argparse
import math

from vertexpos.cli import bench_rows, fit_slope


def report(title, rows):
    print(title)
    for n, m, t in rows:
        print(f"  n={n:5d}  m={m:7d}  {t:8.2f}s")
    ns = [r[0] for r in rows]
    ts = [r[2] for r in rows]
    print(f"  slope vs n:   {fit_slope(ns, ts):.2f}")
    print(f"  slope vs n*m: {fit_slope([n * max(m, 1) for n, m, _ in rows], ts):.2f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", default="250,500,1000,2000")
    ap.add_argument("--p", type=float, default=0.01)
    ap.add_argument("--avg-degree", type=float, default=20.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    report(f"G(n, {args.p})", bench_rows(sizes, p=args.p, seed=args.seed, threads=args.threads))
    if not math.isclose(args.avg_degree, 0.0):
        report(
            f"G(n, {args.avg_degree}/(n-1))",
            bench_rows(sizes, avg_degree=args.avg_degree, seed=args.seed, threads=args.threads),
        )


if __name__ == "__main__":
    main()

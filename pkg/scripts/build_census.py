#!/usr/bin/env python3
"""Regenerate the bundled graph6 census files under src/vertexpos/data/.

    python scripts/build_census.py            # connected n<=8, all graphs n<=7
    python scripts/build_census.py --connected-max 7 --all-max 6
"""

import argparse
import time
from pathlib import Path

from vertexpos.census import build_census

DATA = Path(__file__).resolve().parent.parent / "src" / "vertexpos" / "data"


def write(kind, census):
    for n, codes in census.items():
        path = DATA / f"{kind}{n}.g6"
        path.write_bytes(b"".join(c + b"\n" for c in codes))
        print(f"{path.name}: {len(codes)} graphs")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--connected-max", type=int, default=8)
    ap.add_argument("--all-max", type=int, default=7)
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    t = time.time()
    write("connected", build_census(args.connected_max, connected=True))
    write("graphs", build_census(args.all_max, connected=False))
    print(f"done in {time.time() - t:.1f} s")


if __name__ == "__main__":
    main()

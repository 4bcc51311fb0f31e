#!/usr/bin/env python3
"""Print p_x at x, c1, b1, a1 of the bundled example graph, with witnesses."""

from vertexpos.generators import generate
from vertexpos.solver import solve_px


def main():
    g = generate("paperFig1")
    for lab in ("x", "c1", "b1", "a1"):
        r = solve_px(g, g.index(lab), check=True)
        print(f"{lab:3s} {r.value:3d}  {' '.join(g.label(v) for v in r.witness)}")


if __name__ == "__main__":
    main()

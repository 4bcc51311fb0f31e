"""Canonical labelling and orderly-ish generation of small unlabelled graphs.

Only meant for the tiny census (n <= 8): canonical forms come from colour
refinement plus exhaustive individualisation, keeping the lexicographically
smallest graph6 string over all leaves of the search tree.
"""

from __future__ import annotations

from .graph import Graph, encode_graph6, parse_graph6


def _refine(g: Graph, colour: list) -> list:
    """Stable colouring by 1-WL; colours renumbered by sorted signature."""
    k = len(set(colour))
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in g.adj[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == k:
            return new
        colour, k = new, len(ranks)


def _code(g: Graph, order: list) -> bytes:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    relabelled = Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])
    return encode_graph6(relabelled)


def canonical_form(g: Graph) -> bytes:
    """graph6 of a canonical relabelling: equal iff the graphs are isomorphic."""
    best = [None]

    def search(colour):
        colour = _refine(g, colour)
        cells = {}
        for v, c in enumerate(colour):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            code = _code(g, sorted(range(g.n), key=lambda v: colour[v]))
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        for v in cells[target]:
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colour)]
            search(split)

    search([0] * g.n)
    return best[0]


def extend(g: Graph, neighbours) -> Graph:
    """``g`` plus a new vertex ``n`` adjacent to ``neighbours``."""
    return Graph(g.n + 1, g.edges() + [(v, g.n) for v in neighbours])


def next_census(graphs, connected: bool) -> list:
    """All graphs on one more vertex, up to isomorphism.

    From all graphs on ``n`` vertices every graph on ``n + 1`` arises by
    adding a vertex. For connected graphs it suffices to extend connected
    graphs by a non-empty neighbourhood, since every connected graph has a
    vertex whose removal leaves it connected.
    """
    seen = {}
    for g in graphs:
        n = g.n
        start = 1 if connected else 0
        for mask in range(start, 1 << n):
            h = extend(g, [v for v in range(n) if mask >> v & 1])
            key = canonical_form(h)
            if key not in seen:
                seen[key] = key
    return sorted(seen)


def build_census(max_n: int, connected: bool) -> dict:
    """``{n: [canonical graph6 bytes, ...]}`` for ``1 <= n <= max_n``."""
    level = [Graph(1)]
    out = {1: [canonical_form(level[0])]}
    for n in range(2, max_n + 1):
        codes = next_census(level, connected)
        out[n] = codes
        level = [parse_graph6(c) for c in codes]
    return out

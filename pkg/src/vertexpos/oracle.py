"""Brute-force ground truth for small graphs.

Nothing here shares code with the polynomial solver beyond the Graph type
and the plain Python BFS: distances come from per-vertex ``bfs_layers``, and
every feasibility test is the betweenness identity
``d(a, z) + d(z, b) = d(a, b)`` evaluated directly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import Graph, bfs_layers, bipartition, is_bipartite
from .matching import hopcroft_karp
from .solver import ORACLE, PositionResult


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12  # p_x and alpha
    max_gp_vertices: int = 10
    max_nodes: int = 20_000_000  # search-tree nodes per call
    time_limit: float | None = None  # seconds

    def admit(self, n: int, limit: int, what: str):
        if n > limit:
            raise BudgetExceeded(f"{what} oracle limited to {limit} vertices, got {n}")


class _Counter:
    def __init__(self, budget: OracleBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(f"search exceeded {self.budget.max_nodes} nodes")
        limit = self.budget.time_limit
        if limit is not None and self.nodes % 4096 == 0 and time.monotonic() - self.start > limit:
            raise BudgetExceeded(f"search exceeded {limit} s")


def all_distances(g: Graph) -> list:
    """Distance rows from plain BFS; ``None`` marks unreachable pairs."""
    return [bfs_layers(g, v).dist for v in range(g.n)]


def _between(D, a, z, b) -> bool:
    """``z`` lies on some ``a, b``-geodesic (``z != b``)."""
    if z == b:
        return False
    dab, daz, dzb = D[a][b], D[a][z], D[z][b]
    return dab is not None and daz is not None and dzb is not None and daz + dzb == dab


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_independent_set(conflict: list, counter: _Counter | None = None, exclude: int = 0, ceiling: int | None = None) -> int:
    """Bitmask of a maximum independent set; ``conflict[v]`` is v's neighbour mask.

    Simple branch and bound: branch on the candidate with most conflicts,
    prune when the remaining candidates cannot beat the incumbent, and stop
    outright once the incumbent reaches a known ``ceiling``.
    """
    k = len(conflict)
    best = [0, 0]  # size, mask

    def rec(cand, chosen, size):
        if counter is not None:
            counter.tick()
        if ceiling is not None and best[0] >= ceiling:
            return
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + bin(cand).count("1") <= best[0]:
            return
        v = max(_bits(cand), key=lambda u: (bin(conflict[u] & cand).count("1"), -u))
        bit = 1 << v
        rec(cand & ~conflict[v] & ~bit, chosen | bit, size + 1)
        if conflict[v] & cand:
            rec(cand & ~bit, chosen, size)

    rec(((1 << k) - 1) & ~exclude, 0, 0)
    return best[1]


def max_independent_set_size(conflict: list) -> int:
    return bin(max_independent_set(conflict)).count("1")


def position_conflicts(g: Graph, x: int, D=None) -> list:
    """Pairwise conflicts of the x-position property over all of V(G).

    ``y`` and ``z`` conflict iff one lies on a geodesic from ``x`` to the
    other. The root conflicts with every vertex it reaches.
    """
    if D is None:
        D = all_distances(g)
    n = g.n
    conflict = [0] * n
    for y in range(n):
        for z in range(n):
            if z != y and _between(D, x, z, y):
                conflict[y] |= 1 << z
                conflict[z] |= 1 << y
    return conflict


def oracle_px(g: Graph, x: int, budget: OracleBudget = OracleBudget(), *, prune: bool = True, avoid=()) -> PositionResult:
    """Exact ``p_x`` by exhaustive search.

    ``prune=False`` enumerates every subset instead (pruning self-test).
    ``avoid`` restricts the search to sets disjoint from the given vertices.
    """
    if not 0 <= x < g.n:
        raise IndexError(f"root {x} out of range for n={g.n}")
    budget.admit(g.n, budget.max_vertices, "p_x")
    if g.n == 1:
        return PositionResult(x, (), 0, ORACLE, 1)
    D = all_distances(g)
    conflict = position_conflicts(g, x, D)
    excl = 0
    for v in avoid:
        excl |= 1 << v
    counter = _Counter(budget)
    if prune:
        # at most one vertex per geodesic from x to an eccentric vertex
        comp = [v for v in range(g.n) if D[x][v] is not None]
        ecc = max(D[x][v] for v in comp)
        ceiling = g.n - ecc if len(comp) > 1 else g.n
        mask = max_independent_set(conflict, counter, excl, ceiling)
    else:
        mask = 0
        for s in range(1 << g.n):
            counter.tick()
            if s & excl or bin(s).count("1") <= bin(mask).count("1"):
                continue
            if all(not (conflict[v] & s) for v in _bits(s)):
                mask = s
    witness = tuple(_bits(mask))
    return PositionResult(x, witness, len(witness), ORACLE, g.n)


def oracle_gp(g: Graph, budget: OracleBudget = OracleBudget()) -> int:
    """Exact general position number by backtracking over vertex triples."""
    budget.admit(g.n, budget.max_gp_vertices, "gp")
    n = g.n
    if n <= 2:
        return n
    D = all_distances(g)

    def bad(a, b, c):
        # one of three vertices lies on a geodesic between the other two
        return _between(D, a, b, c) or _between(D, b, a, c) or _between(D, a, c, b)

    counter = _Counter(budget)
    order = sorted(range(n), key=lambda v: (-len(g.adj[v]), v))
    best = [0]

    def rec(chosen, cand):
        counter.tick()
        if len(chosen) + len(cand) <= best[0]:
            return
        if not cand:
            best[0] = len(chosen)
            return
        v, rest = cand[0], cand[1:]
        keep = [c for c in rest if not any(bad(a, v, c) for a in chosen)]
        rec(chosen + [v], keep)
        rec(chosen, rest)

    rec([], order)
    return best[0]


def oracle_alpha(g: Graph, budget: OracleBudget = OracleBudget()) -> int:
    """Independence number: König for bipartite graphs, search otherwise."""
    if is_bipartite(g):
        left, right = bipartition(g)
        rpos = {v: i for i, v in enumerate(right)}
        indptr, indices = [0], []
        for u in left:
            indices.extend(rpos[w] for w in g.adj[u])
            indptr.append(len(indices))
        return g.n - hopcroft_karp(len(left), len(right), indptr, indices).size
    budget.admit(g.n, budget.max_vertices, "alpha")
    conflict = list(g.mask)
    return bin(max_independent_set(conflict, _Counter(budget))).count("1")

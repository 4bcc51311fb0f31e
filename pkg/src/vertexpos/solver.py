"""Polynomial-time x-position numbers via maximum antichains.

For a root ``x`` the vertices of its component (other than ``x``) are
ordered by ``u < v`` iff ``u`` lies on some ``x, v``-geodesic, i.e.
``d(x, u) + d(u, v) = d(x, v)``. A set avoids every geodesic to ``x``
exactly when it is an antichain of this order, so ``p_x`` is the width of
the order, found here by Dilworth/König over a Hopcroft-Karp matching.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, bfs_layers, boundary, distance_matrix
from .matching import maximum_antichain_csr

POLYNOMIAL = "polynomial"
ORACLE = "oracle"


class InvariantError(AssertionError):
    """A structural invariant of the solver failed (a bug, never user error)."""


@dataclass(frozen=True)
class GeodesicOrder:
    """Strict geodesic order below a root, stored as CSR successor lists.

    ``vertices`` are the graph ids of the root's component without the root,
    ascending; ``indices[indptr[i]:indptr[i+1]]`` are the positions (into
    ``vertices``) of everything above ``vertices[i]``. The relation is
    already transitively closed.
    """

    root: int
    vertices: tuple
    indptr: list
    indices: list

    @property
    def size(self) -> int:
        return len(self.vertices)

    def _pos(self, v):
        return self.vertices.index(v)

    def successors(self, u: int) -> frozenset:
        i = self._pos(u)
        return frozenset(self.vertices[j] for j in self.indices[self.indptr[i]:self.indptr[i + 1]])

    def less(self, u: int, v: int) -> bool:
        if u not in self.vertices or v not in self.vertices:
            return False
        return v in self.successors(u)

    def pairs(self) -> set:
        vs = self.vertices
        return {
            (vs[i], vs[j])
            for i in range(len(vs))
            for j in self.indices[self.indptr[i]:self.indptr[i + 1]]
        }

    def masks(self) -> dict:
        """Successor bitmask (over graph ids) for every element."""
        vs = self.vertices
        out = {}
        for i, u in enumerate(vs):
            m = 0
            for j in self.indices[self.indptr[i]:self.indptr[i + 1]]:
                m |= 1 << vs[j]
            out[u] = m
        return out

    def is_antichain(self, s) -> bool:
        pos = {v: i for i, v in enumerate(self.vertices)}
        inside = set(pos[v] for v in s if v in pos)
        return not any(
            j in inside for i in inside for j in self.indices[self.indptr[i]:self.indptr[i + 1]]
        )


@dataclass(frozen=True)
class PositionResult:
    root: int
    witness: tuple
    value: int
    method: str = POLYNOMIAL
    n: int = 0
    crosscheck: dict | None = None

    def to_json(self) -> dict:
        out = {"n": self.n, "root": self.root, "p_x": self.value, "witness": list(self.witness), "method": self.method}
        if self.crosscheck is not None:
            out["crosscheck"] = self.crosscheck
        return out


@dataclass(frozen=True)
class VpSummary:
    values: tuple  # p_x for x = 0..n-1
    vp: int
    vp_minus: int
    argmax: frozenset
    argmin: frozenset
    results: tuple = field(repr=False, default=())

    def to_json(self) -> dict:
        return {
            "n": len(self.values),
            "vp": self.vp,
            "vp_minus": self.vp_minus,
            "argmax": sorted(self.argmax),
            "argmin": sorted(self.argmin),
            "p": list(self.values),
        }


def _check_root(g: Graph, x: int):
    if not 0 <= x < g.n:
        raise IndexError(f"root {x} out of range for n={g.n}")


def _order_pairs(dist: np.ndarray, x: int):
    """Component of ``x`` (without ``x``) and the comparable pairs below it.

    Returns ``(comp, rows, cols)`` where ``comp`` lists graph ids ascending and
    ``comp[rows[i]] < comp[cols[i]]``, sorted by row. Unreachable entries are
    ``-1`` and can only satisfy the identity on the diagonal, which is dropped
    together with the row of ``x`` itself.
    """
    dx = dist[x]
    less = (dx[:, None] + dist) == dx[None, :]
    r, c = np.nonzero(less)
    keep = (r != c) & (r != x)
    r, c = r[keep], c[keep]
    comp = np.flatnonzero(dx >= 0)
    comp = comp[comp != x]
    pos = np.full(len(dx), -1, dtype=np.int64)
    pos[comp] = np.arange(len(comp))
    return comp, pos[r], pos[c]


def _csr(k: int, rows: np.ndarray, cols: np.ndarray):
    indptr = np.searchsorted(rows, np.arange(k + 1)).tolist()
    return indptr, cols.tolist()


def _order_matrix(k: int, rows, cols) -> np.ndarray:
    less = np.zeros((k, k), dtype=bool)
    less[rows, cols] = True
    return less


def geodesic_order(g: Graph, x: int, dist: np.ndarray | None = None) -> GeodesicOrder:
    """The order ``u < v`` iff ``d(x,u) + d(u,v) = d(x,v)`` on ``x``'s component."""
    _check_root(g, x)
    if dist is None:
        dist = distance_matrix(g)
    comp, rows, cols = _order_pairs(dist, x)
    indptr, indices = _csr(len(comp), rows, cols)
    return GeodesicOrder(x, tuple(int(v) for v in comp), indptr, indices)


def max_antichain(order: GeodesicOrder) -> frozenset:
    """A maximum antichain of ``order`` (graph ids)."""
    anti, _ = maximum_antichain_csr(order.size, order.indptr, order.indices)
    return frozenset(order.vertices[i] for i in anti)


def reduced_graph(g: Graph, x: int) -> Graph:
    """``g`` without the edges joining two vertices equidistant from ``x``."""
    d = bfs_layers(g, x).dist
    return g.remove_edges((u, v) for u, v in g.edges() if d[u] is not None and d[u] == d[v])


def verify_position_set(g: Graph, x: int, s, dist: np.ndarray | None = None) -> bool:
    """True iff no member of ``s`` lies on a geodesic from ``x`` to another.

    Members outside ``x``'s component never conflict with anything. The
    root itself lies on every geodesic from ``x``, so it can only appear
    alongside vertices it cannot reach.
    """
    _check_root(g, x)
    s = sorted(set(s))
    if any(not 0 <= v < g.n for v in s):
        raise IndexError("vertex out of range")
    if len(s) <= 1:
        return True
    if dist is None:
        dx = bfs_layers(g, x).dist
        reach = [v for v in s if dx[v] is not None]
        rows = {v: bfs_layers(g, v).dist for v in reach}
        for y in reach:
            for z in reach:
                if z != y and dx[z] + rows[z][y] == dx[y]:
                    return False
        return True
    dx = dist[x]
    sa = np.array(s)
    sa = sa[dx[sa] >= 0]
    if len(sa) <= 1:
        return True
    d = dx[sa]
    hit = (d[:, None] + dist[np.ix_(sa, sa)]) == d[None, :]
    np.fill_diagonal(hit, False)
    return not bool(hit.any())


def _is_transitive(less: np.ndarray) -> bool:
    a = less.astype(np.int32)
    two_step = (a @ a) > 0
    return not bool((two_step & ~less).any())


def solve_px(g: Graph, x: int, *, dist: np.ndarray | None = None, check: bool = False) -> PositionResult:
    """Maximum ``x``-position set.

    Vertices outside ``x``'s component are always included. Conventions:
    ``n = 1`` gives the empty set; an isolated root in a larger graph gives
    the whole vertex set (the root sees nothing, so nothing blocks it).

    The witness is always checked to contain no comparable pair. With
    ``check=True`` the order's transitivity, the Dilworth count identity,
    the reduced-graph equivalence and a BFS-only re-verification of the
    witness are asserted as well.
    """
    _check_root(g, x)
    n = g.n
    if n == 1:
        return PositionResult(x, (), 0, POLYNOMIAL, n)
    if dist is None:
        dist = distance_matrix(g)
    comp, rows, cols = _order_pairs(dist, x)
    outside = np.flatnonzero(dist[x] < 0).tolist()
    if len(comp) == 0:
        witness = tuple(range(n))
        return PositionResult(x, witness, n, POLYNOMIAL, n)

    k = len(comp)
    indptr, indices = _csr(k, rows, cols)
    anti, matching = maximum_antichain_csr(k, indptr, indices)
    witness = tuple(sorted([int(comp[i]) for i in anti] + outside))

    # no comparable pair inside the antichain
    chosen = np.zeros(k, dtype=bool)
    chosen[anti] = True
    if (chosen[rows] & chosen[cols]).any():
        raise InvariantError(f"witness {witness} is not an x-position set for x={x}")

    if check:
        less = _order_matrix(k, rows, cols)
        if not _is_transitive(less):
            raise InvariantError(f"geodesic order from {x} is not transitive")
        if len(anti) + matching.size != len(comp):
            raise InvariantError("antichain + matching != component size")
        red = reduced_graph(g, x)
        if solve_px(red, x).value != len(witness):
            raise InvariantError(f"reduced graph changes p_x at root {x}")
        if not verify_position_set(g, x, witness):
            raise InvariantError(f"witness {witness} fails the BFS-based position check")
    return PositionResult(x, witness, len(witness), POLYNOMIAL, n)


def solve_all(g: Graph, *, workers: int | None = 1, check: bool = False, dist: np.ndarray | None = None) -> VpSummary:
    """``p_x`` for every root, plus ``vp`` (max) and ``vp^-`` (min).

    ``workers > 1`` spreads roots over a thread pool sharing the distance
    matrix; ``None`` means one worker per CPU. Results are ordered by root.
    """
    if dist is None and g.n > 1:
        dist = distance_matrix(g)

    def one(x):
        return solve_px(g, x, dist=dist, check=check)

    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and g.n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, range(g.n)))
    else:
        results = [one(x) for x in range(g.n)]
    values = tuple(r.value for r in results)
    if not values:
        return VpSummary((), 0, 0, frozenset(), frozenset(), ())
    hi, lo = max(values), min(values)
    return VpSummary(
        values,
        hi,
        lo,
        frozenset(x for x, v in enumerate(values) if v == hi),
        frozenset(x for x, v in enumerate(values) if v == lo),
        tuple(results),
    )


def boundary_position_set(g: Graph, x: int) -> frozenset:
    """The boundary of ``x``: always an ``x``-position set, seldom a maximum one."""
    _check_root(g, x)
    b = boundary(g, x)
    if not verify_position_set(g, x, b):
        raise InvariantError(f"boundary of {x} is not an x-position set")
    return b


def algorithm_a_edges(g: Graph, x: int, reading: str = "uw") -> set:
    """Edge set of ``G*_x - x`` built by the queue-driven forward visits.

    A line-by-line transcription kept as a cross-check for
    :func:`geodesic_order`. Within the visit from ``u`` the added edge is
    read as ``u-w`` (``reading="uw"``); ``reading="uv"`` follows the other
    possible reading, joining ``u`` to the dequeued vertex instead.
    """
    if reading not in ("uw", "uv"):
        raise ValueError("reading must be 'uw' or 'uv'")
    D = bfs_layers(g, x).dist
    edges = {(min(u, v), max(u, v)) for u, v in g.edges() if D[u] is not None and D[u] != D[v]}
    for u in range(g.n):
        if u == x or D[u] is None:
            continue
        queue = [u]
        seen = {u}
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.adj[v]:
                if w in seen or D[w] <= D[v]:
                    continue
                queue.append(w)
                seen.add(w)
                if D[w] > D[u] + 1:
                    a, b = (u, w) if reading == "uw" else (u, v)
                    edges.add((min(a, b), max(a, b)))
    return {(a, b) for a, b in edges if a != x and b != x}


def algorithm_a_value(g: Graph, x: int, reading: str = "uw") -> int:
    """``alpha(G*_x - x)`` on the transcribed edge set (brute force, small graphs)."""
    from .oracle import max_independent_set_size

    comp = [v for v in bfs_layers(g, x).component if v != x]
    pos = {v: i for i, v in enumerate(comp)}
    conflict = [0] * len(comp)
    for a, b in algorithm_a_edges(g, x, reading):
        if a in pos and b in pos:
            conflict[pos[a]] |= 1 << pos[b]
            conflict[pos[b]] |= 1 << pos[a]
    return max_independent_set_size(conflict) + (g.n - len(comp) - 1)

"""Simple undirected graphs, text formats, and distance/structure primitives."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

INF = math.inf

GRAPH6_HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte offset (graph6) and ``line`` the 1-based line
    number (edge list) of the offending input, when known.
    """

    def __init__(self, message, *, offset=None, line=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Neighbourhoods are kept both as sorted tuples and as integer bitmasks
    (bit ``v`` set in ``mask[u]`` iff ``u ~ v``). ``labels`` is an optional
    sidecar naming each vertex; it plays no part in equality.
    """

    __slots__ = ("n", "adj", "mask", "labels", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._freeze(n, nbrs, labels)

    def _freeze(self, n, nbrs, labels):
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        masks = []
        for s in adj:
            m = 0
            for v in s:
                m |= 1 << v
            masks.append(m)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("label map must name every vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "mask", tuple(masks))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_m", sum(len(s) for s in adj) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adjacency(cls, nbrs: Sequence[Iterable[int]], labels=None) -> "Graph":
        edges = [(u, v) for u, vs in enumerate(nbrs) for v in vs if u < v]
        g = cls(len(nbrs), edges, labels)
        for u, vs in enumerate(nbrs):
            if set(vs) != set(g.adj[u]):
                raise ValueError(f"adjacency is not symmetric at vertex {u}")
        return g

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mask[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def index(self, label: str) -> int:
        """Vertex id for a label (or a plain integer string)."""
        if self.labels and label in self.labels:
            return self.labels.index(label)
        try:
            v = int(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None
        if not 0 <= v < self.n:
            raise KeyError(f"vertex {v} out of range")
        return v

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 0..k-1 in ascending id order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[w]) for u in vs for w in self.adj[u] if w in pos and u < w]
        labels = [self.labels[v] for v in vs] if self.labels else None
        return Graph(len(vs), edges, labels)

    def remove_edges(self, drop: Iterable[tuple[int, int]]) -> "Graph":
        dropped = {(min(u, v), max(u, v)) for u, v in drop}
        return Graph(self.n, [e for e in self.edges() if e not in dropped], self.labels)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, g6={encode_graph6(self).decode()!r})"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph6 cannot encode more than 68719476735 vertices")


def encode_graph6(g: Graph) -> bytes:
    """Canonical graph6 bytes for ``g`` (no header, no trailing newline)."""
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        mj = g.mask[j]
        for i in range(j):
            acc = (acc << 1) | (mj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 string. An optional ``>>graph6<<`` header is skipped."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    if not data:
        raise GraphFormatError("empty graph6 string", offset=base)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {c!r} outside graph6 range 63..126", offset=base + i)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte size header", offset=base)
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 4-byte size header", offset=base)
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        raise GraphFormatError(
            f"expected {expected} edge bytes for n={n}, found {len(body)}",
            offset=base + pos + min(len(body), expected),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6] - 63
            if c >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise GraphFormatError("nonzero padding bits", offset=base + len(data) - 1)
    return Graph(n, edges)


def read_graph6_lines(text: bytes | str) -> list[Graph]:
    """Every graph in a newline-separated graph6 stream (blank lines skipped)."""
    data = text.encode("ascii") if isinstance(text, str) else text
    return [parse_graph6(line) for line in data.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# edge list
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-indexed).

    Blank lines and ``#`` comments are ignored, except that a comment line
    ``# labels: a b c ...`` names the vertices in order. Self-loops,
    duplicate edges, out-of-range ids and a wrong edge count are rejected
    with a line number.
    """
    header = None
    labels = None
    edges: list[tuple[int, int]] = []
    seen = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("# labels:") and labels is None:
            labels = (raw[len("# labels:"):].split(), lineno)
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line=lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative size in header", line=lineno)
            header = (a, b)
            continue
        n = header[0]
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", line=lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex id out of range [0, {n})", line=lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing 'n m' header", line=1)
    if len(edges) != header[1]:
        raise GraphFormatError(f"header promised {header[1]} edges, found {len(edges)}", line=last_line)
    if labels is not None:
        names, lineno = labels
        if len(names) != header[0] or len(set(names)) != len(names):
            raise GraphFormatError(f"labels line must name {header[0]} distinct vertices", line=lineno)
        return Graph(header[0], edges, names)
    return Graph(header[0], edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    if g.labels:
        lines.insert(0, "# labels: " + " ".join(g.labels))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceLayers:
    root: int
    dist: tuple  # int per vertex, None when unreachable
    ecc: int
    layers: tuple  # layers[t] = sorted tuple of vertices at distance t

    @property
    def component(self) -> list[int]:
        return [v for v, d in enumerate(self.dist) if d is not None]


def bfs_layers(g: Graph, x: int) -> DistanceLayers:
    if not 0 <= x < g.n:
        raise IndexError(f"root {x} out of range for n={g.n}")
    dist: list[int | None] = [None] * g.n
    dist[x] = 0
    layers = [[x]]
    frontier = [x]
    while frontier:
        nxt = []
        t = len(layers)
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = t
                    nxt.append(w)
        if nxt:
            layers.append(sorted(nxt))
        frontier = nxt
    return DistanceLayers(x, tuple(dist), len(layers) - 1, tuple(tuple(layer) for layer in layers))


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances as an integer matrix, ``-1`` when unreachable.

    ``int16`` up to 32000 vertices (halves memory traffic), ``int32`` beyond.

    One BFS per vertex, run by scipy's compiled csgraph routines.
    """
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import shortest_path

    n = g.n
    if n == 0:
        return np.zeros((0, 0), dtype=np.int16)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in g.adj])
    indices = np.fromiter((v for a in g.adj for v in a), dtype=np.int32, count=int(indptr[-1]))
    A = csr_matrix((np.ones(len(indices), dtype=np.int8), indices, indptr), shape=(n, n))
    D = shortest_path(A, method="D", directed=False, unweighted=True)
    dtype = np.int16 if n < 32000 else np.int32
    out = np.full((n, n), -1, dtype=dtype)
    finite = np.isfinite(D)
    out[finite] = D[finite].astype(dtype)
    return out


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphMetrics:
    n: int
    m: int
    connected: bool
    # None when the graph is disconnected (or empty); see component_* fields
    diameter: int | None
    radius: int | None
    component_diameters: tuple
    component_radii: tuple
    eccentricity: tuple  # within each vertex's own component
    girth: float  # INF when acyclic
    min_degree: int
    max_degree: int
    simplicial: frozenset
    cut_vertices: frozenset
    boundary: dict  # x -> frozenset, the boundary vertices of x


def is_simplicial(g: Graph, v: int) -> bool:
    nv = g.mask[v]
    for u in g.adj[v]:
        if nv & ~(g.mask[u] | (1 << u)):
            return False
    return True


def cut_vertices(g: Graph) -> frozenset:
    """Articulation points by iterative Tarjan low-link DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    t = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = t
        t += 1
        root_children = 0
        stack = [(s, -1, iter(g.adj[s]))]
        while stack:
            u, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(g.adj[w])))
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if parent == -1:
                    continue
                low[parent] = min(low[parent], low[u])
                if parent == s:
                    root_children += 1
                elif low[u] >= disc[parent]:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(s)
    return frozenset(cuts)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INF`` for a forest.

    For every root a BFS stops at the first non-tree edge; the shortest
    cycle through a vertex is found exactly from at least one of its roots.
    """
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def boundary(g: Graph, x: int, dist=None) -> frozenset:
    """Vertices ``v`` with ``d(x, w) <= d(x, v)`` for every neighbour ``w``."""
    if dist is None:
        dist = bfs_layers(g, x).dist
    out = []
    for v in range(g.n):
        dv = dist[v]
        if dv is None:
            continue
        if all(dist[w] <= dv for w in g.adj[v]):
            out.append(v)
    return frozenset(out)


def metrics(g: Graph) -> GraphMetrics:
    n = g.n
    comps = g.components()
    ecc = [0] * n
    bnd = {}
    for x in range(n):
        lay = bfs_layers(g, x)
        ecc[x] = lay.ecc
        bnd[x] = boundary(g, x, lay.dist)
    cdiam = tuple(max(ecc[v] for v in c) for c in comps)
    crad = tuple(min(ecc[v] for v in c) for c in comps)
    connected = len(comps) == 1
    degs = [len(a) for a in g.adj]
    return GraphMetrics(
        n=n,
        m=g.m,
        connected=connected,
        diameter=cdiam[0] if connected else None,
        radius=crad[0] if connected else None,
        component_diameters=cdiam,
        component_radii=crad,
        eccentricity=tuple(ecc),
        girth=girth(g),
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        simplicial=frozenset(v for v in range(n) if is_simplicial(g, v)),
        cut_vertices=cut_vertices(g),
        boundary=bnd,
    )


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    edges = []
    for u in range(g.n):
        rest = full & ~g.mask[u] & ~((1 << (u + 1)) - 1)
        while rest:
            low = rest & -rest
            edges.append((u, low.bit_length() - 1))
            rest ^= low
    return Graph(g.n, edges, g.labels)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them."""
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for h in graphs:
        edges += [(u + off, v + off) for u, v in h.edges()]
        off += h.n
    return Graph(off, edges)


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except ValueError:
        return False
    return True


def bipartition(g: Graph) -> tuple[list[int], list[int]]:
    """Two colour classes of a bipartite graph; raises ValueError otherwise."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    raise ValueError("graph is not bipartite")
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


def blocks(g: Graph) -> list[frozenset]:
    """Vertex sets of the biconnected components (isolated vertices excluded)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out = []
    t = 0
    for s in range(g.n):
        if disc[s] != -1 or not g.adj[s]:
            continue
        disc[s] = low[s] = t
        t += 1
        edge_stack = []
        stack = [(s, -1, iter(g.adj[s]))]
        while stack:
            u, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(g.adj[w])))
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if parent == -1:
                    continue
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    comp = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (parent, u):
                            break
                    out.append(frozenset(comp))
    return out

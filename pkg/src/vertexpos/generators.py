"""Deterministic constructors for the graph families under study.

Family specs use the CLI syntax ``name:arg,arg,key=value``, e.g.
``cycle:6``, ``kneser:7,2``, ``paperG_r:4``, ``gnp:20,0.3,seed=42``.

Randomised families draw from :class:`random.Random` (MT19937) seeded
explicitly; only ``random()`` and ``randrange()`` are used, both of which
are stable across platforms and Python versions >= 3.2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from importlib import resources

from .graph import Graph, parse_edge_list, parse_graph6

MAX_CENSUS_CONNECTED = 8
MAX_CENSUS_ALL = 7


@dataclass(frozen=True)
class FamilySpec:
    family: str
    args: tuple = ()
    options: dict = field(default_factory=dict, hash=False, compare=False)

    def __str__(self):
        parts = [str(a) for a in self.args] + [f"{k}={v}" for k, v in self.options.items()]
        return self.family + (":" + ",".join(parts) if parts else "")

    def params(self) -> dict:
        """Arguments keyed by name, for checks that need them."""
        names = _ARG_NAMES.get(self.family, ())
        out = dict(zip(names, self.args))
        if self.family in ("multipartite", "bipartite"):
            out["parts"] = tuple(self.args)
        out.update(self.options)
        out["family"] = self.family
        return out


_ALIASES = {
    "completeMultipartite": "multipartite",
    "tree-random": "tree",
    "blockGraph-random": "block",
    "gnp-random": "gnp",
    "G_r": "paperG_r",
    "paperFig1": "paperFig1",
}

_ARG_NAMES = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "empty": ("n",),
    "star": ("k",),
    "cocktail": ("r",),
    "tree": ("n",),
    "block": ("blocks", "max_size"),
    "kneser": ("n", "k"),
    "paperG_r": ("r",),
    "gnp": ("n", "p"),
}


def _num(tok: str):
    try:
        return int(tok)
    except ValueError:
        return float(tok)


def parse_family(text: str) -> FamilySpec:
    """Parse ``name[:a,b,key=value]`` into a :class:`FamilySpec`."""
    name, _, rest = text.strip().partition(":")
    name = _ALIASES.get(name, name)
    args, opts = [], {}
    if rest:
        for tok in rest.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if "=" in tok:
                k, v = tok.split("=", 1)
                opts[k.strip()] = _num(v.strip())
            else:
                try:
                    args.append(_num(tok))
                except ValueError:
                    raise ValueError(f"bad argument {tok!r} in family spec {text!r}") from None
    return FamilySpec(name, tuple(args), opts)


def _need(cond, msg):
    if not cond:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 0, "empty graph needs n >= 0")
    return Graph(n)


def complete_multipartite(parts) -> Graph:
    parts = [int(p) for p in parts]
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), "part sizes must be positive")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def star(k: int) -> Graph:
    _need(k >= 1, "star needs k >= 1 leaves")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def cocktail_party(r: int) -> Graph:
    """``K_{2r}`` minus a perfect matching, i.e. ``K_{2,2,...,2}``."""
    _need(r >= 1, "cocktail party graph needs r >= 1")
    return complete_multipartite([2] * r)


def kneser(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of range(n) in lexicographic order."""
    _need(k >= 1 and n >= 2 * k, "kneser needs n >= 2k >= 2")
    subsets = list(itertools.combinations(range(n), k))
    masks = [sum(1 << i for i in s) for s in subsets]
    edges = [
        (i, j)
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if not masks[i] & masks[j]
    ]
    labels = ["{" + ",".join(str(e + 1) for e in s) + "}" for s in subsets]
    return Graph(len(subsets), edges, labels)


def petersen() -> Graph:
    return kneser(5, 2)


def paper_g_r(r: int) -> Graph:
    """Seven cliques of size ``r`` in a row below a root ``x``.

    Consecutive cliques are completely joined and ``x`` is joined to the
    first; then ``u_{3,1}``, ``u_{4,1}``, ``u_{5,1}`` lose every edge except
    those of the path ``u_{2,1} u_{3,1} u_{4,1} u_{5,1} u_{6,1}``.
    """
    _need(r >= 2, "paperG_r needs r >= 2")
    labels = ["x"] + [f"u{i},{j}" for i in range(1, 8) for j in range(1, r + 1)]
    idx = {lab: k for k, lab in enumerate(labels)}

    def u(i, j):
        return idx[f"u{i},{j}"]

    edges = {(0, u(1, j)) for j in range(1, r + 1)}
    for i in range(1, 8):
        for j, jj in itertools.combinations(range(1, r + 1), 2):
            edges.add((u(i, j), u(i, jj)))
    for i in range(1, 7):
        for j in range(1, r + 1):
            for jj in range(1, r + 1):
                edges.add((u(i, j), u(i + 1, jj)))
    special = {u(3, 1), u(4, 1), u(5, 1)}
    spine = [u(i, 1) for i in range(2, 7)]
    keep = {frozenset(p) for p in zip(spine, spine[1:])}
    edges = {e for e in edges if not (set(e) & special) or frozenset(e) in keep}
    return Graph(len(labels), sorted(edges), labels)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree from a random Prüfer sequence."""
    _need(n >= 1, "tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    for v in code:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def random_block_graph(blocks: int, max_size: int = 4, seed: int = 0) -> Graph:
    """Random tree of cliques.

    Starts from one clique; each further clique of random size in
    ``[2, max_size]`` is glued onto a uniformly chosen existing vertex.
    """
    _need(blocks >= 1 and max_size >= 2, "block graph needs blocks >= 1, max_size >= 2")
    rng = random.Random(seed)
    size = 2 + rng.randrange(max_size - 1)
    n = size
    edges = list(itertools.combinations(range(size), 2))
    for _ in range(blocks - 1):
        at = rng.randrange(n)
        size = 2 + rng.randrange(max_size - 1)
        members = [at] + list(range(n, n + size - 1))
        n += size - 1
        edges += list(itertools.combinations(members, 2))
    return Graph(n, edges)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi G(n, p): pairs (i, j), i < j, visited in lexicographic order."""
    _need(n >= 0 and 0.0 <= p <= 1.0, "gnp needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    rand = rng.random
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rand() < p])


def load_fixture(name: str) -> Graph:
    """A labelled edge-list fixture bundled under ``data/``."""
    return parse_edge_list(resources.files("vertexpos").joinpath("data", name).read_text())


_FIXTURES = {
    "paperFig1": "paper_fig1.txt",
    "fig_delta_third": "fig_delta_third.txt",
    "fig_bipartite_half": "fig_bipartite_half.txt",
    "fig_boundary": "fig_boundary.txt",
    "fig_reduced": "fig_reduced.txt",
}

FAMILIES = (
    "path", "cycle", "complete", "empty", "star", "multipartite", "bipartite", "cocktail",
    "tree", "block", "kneser", "petersen", "paperG_r", "gnp",
) + tuple(_FIXTURES)


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    f, a, o = spec.family, spec.args, spec.options
    seed = int(o.get("seed", 0))

    def nargs(k):
        _need(len(a) == k, f"{f} takes {k} argument(s), got {len(a)}")
        return list(a) if f == "gnp" else [int(v) for v in a]

    if f == "path":
        return path(*nargs(1))
    if f == "cycle":
        return cycle(*nargs(1))
    if f == "complete":
        return complete(*nargs(1))
    if f == "empty":
        return empty(*nargs(1))
    if f == "star":
        return star(*nargs(1))
    if f in ("multipartite", "bipartite"):
        _need(len(a) >= 1, f"{f} needs part sizes")
        if f == "bipartite":
            _need(len(a) == 2, "bipartite takes two part sizes")
        return complete_multipartite(a)
    if f == "cocktail":
        return cocktail_party(*nargs(1))
    if f == "tree":
        return random_tree(*nargs(1), seed=seed)
    if f == "block":
        _need(1 <= len(a) <= 2, "block takes blocks[,max_size]")
        return random_block_graph(*[int(v) for v in a], seed=seed)
    if f == "kneser":
        return kneser(*nargs(2))
    if f == "petersen":
        nargs(0)
        return petersen()
    if f == "paperG_r":
        return paper_g_r(*nargs(1))
    if f == "gnp":
        n, p = nargs(2)
        return gnp(int(n), float(p), seed=seed)
    if f in _FIXTURES:
        nargs(0)
        return load_fixture(_FIXTURES[f])
    raise ValueError(f"unknown family {f!r}; known: {', '.join(FAMILIES)}")


def read_census(kind: str, n: int) -> list:
    text = resources.files("vertexpos").joinpath("data", f"{kind}{n}.g6").read_bytes()
    return [parse_graph6(line) for line in text.splitlines() if line]


def enumerate_small_connected(n: int):
    """Every connected graph on ``n`` unlabelled vertices, once each (n <= 8)."""
    _need(1 <= n <= MAX_CENSUS_CONNECTED, f"connected census covers 1 <= n <= {MAX_CENSUS_CONNECTED}")
    yield from read_census("connected", n)


def enumerate_small_graphs(n: int):
    """Every graph (connected or not) on ``n`` unlabelled vertices (n <= 7)."""
    _need(1 <= n <= MAX_CENSUS_ALL, f"full census covers 1 <= n <= {MAX_CENSUS_ALL}")
    yield from read_census("graphs", n)

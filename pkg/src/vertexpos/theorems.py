"""Named, machine-checkable statements about position numbers.

A :class:`TheoremCheck` pairs an applicability predicate with an assertion.
:func:`run_check` evaluates it over a corpus of graphs and returns a
:class:`TheoremReport` whose counterexamples are replayable graph6 strings.

Corpora are described by short strings, see :func:`build_corpus`::

    n<=7               connected census graphs on 1..7 vertices
    all<=6             every graph on 1..6 vertices
    family:kneser:10,2 a single family member
    range:cycle:3..50  one family member per argument in the range
    trees:100:40       100 seeded random trees on 2..40 vertices
    gnp:1000:12        1000 seeded random graphs on 1..12 vertices

Assertions return ``None`` on success and a short diagnostic otherwise.
"""

from __future__ import annotations

import functools
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .generators import (
    MAX_CENSUS_ALL,
    MAX_CENSUS_CONNECTED,
    complete_multipartite,
    generate,
    gnp,
    parse_family,
    random_block_graph,
    random_tree,
    read_census,
)
from .graph import Graph, bfs_layers, blocks, complement, encode_graph6, is_bipartite, join, metrics
from .oracle import BudgetExceeded, OracleBudget, oracle_alpha, oracle_gp, oracle_px
from .solver import algorithm_a_edges, geodesic_order, solve_all, verify_position_set


# ---------------------------------------------------------------------------
# samples and cached invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sample:
    graph: Graph
    params: dict = field(default_factory=dict, hash=False, compare=False)
    source: str = ""


@functools.lru_cache(maxsize=None)
def _summary(g: Graph, strict: bool):
    return solve_all(g, check=strict)


@functools.lru_cache(maxsize=None)
def _metrics(g: Graph):
    return metrics(g)


def clear_caches():
    _summary.cache_clear()
    _metrics.cache_clear()


class Context:
    """Lazily computed invariants of one sample, shared across checks."""

    def __init__(self, sample: Sample, strict: bool = True, budget: OracleBudget = OracleBudget()):
        self.sample = sample
        self.g = sample.graph
        self.n = sample.graph.n
        self.params = sample.params
        self.strict = strict
        self.budget = budget

    @functools.cached_property
    def summary(self):
        return _summary(self.g, self.strict)

    @property
    def p(self) -> tuple:
        return self.summary.values

    @functools.cached_property
    def metrics(self):
        return _metrics(self.g)

    @functools.cached_property
    def co_summary(self):
        return _summary(complement(self.g), self.strict)

    @functools.cached_property
    def co_metrics(self):
        return _metrics(complement(self.g))

    @property
    def connected(self) -> bool:
        return self.g.is_connected()

    @property
    def family(self):
        return self.params.get("family")


# ---------------------------------------------------------------------------
# structural recognisers
# ---------------------------------------------------------------------------

def degrees(g: Graph) -> list:
    return [len(a) for a in g.adj]


def is_path(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and g.m == g.n - 1 and max(degrees(g)) <= 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(d == 2 for d in degrees(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and g.m == g.n - 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def universal_vertices(g: Graph) -> list:
    return [v for v in range(g.n) if len(g.adj[v]) == g.n - 1]


def is_clique_union(g: Graph) -> bool:
    """Every component is a clique."""
    return all(all(len(g.adj[v]) == len(c) - 1 for v in c) for c in g.components())


def multipartite_parts(g: Graph):
    """Parts of a complete multipartite graph (sorted by size, descending), else None."""
    co = complement(g)
    if not is_clique_union(co):
        return None
    return sorted(co.components(), key=lambda c: (-len(c), c))


def is_block_graph(g: Graph) -> bool:
    if not g.is_connected():
        return False
    return all(all(len(set(g.adj[v]) & b) == len(b) - 1 for v in b) for b in blocks(g))


def is_cocktail_party(g: Graph) -> bool:
    """``K_{2r}`` minus a perfect matching, ``r >= 1``."""
    return g.n >= 2 and g.n % 2 == 0 and all(d == g.n - 2 for d in degrees(g))


def deleted_matching_size(g: Graph):
    """Size of ``M`` when ``g = K_n - M`` for a matching ``M``, else None."""
    if any(d < g.n - 2 for d in degrees(g)):
        return None
    return (g.n * (g.n - 1) // 2 - g.m)


def is_k1_join_cliques(g: Graph) -> bool:
    """``K_1`` joined to a disjoint union of at least two cliques."""
    for v in universal_vertices(g):
        rest = g.induced(u for u in range(g.n) if u != v)
        if len(rest.components()) >= 2 and is_clique_union(rest):
            return True
    return False


def leaves(g: Graph) -> list:
    return [v for v in range(g.n) if len(g.adj[v]) == 1]


def co_components(g: Graph) -> list:
    return complement(g).components()


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def kneser_guard(n: int, k: int) -> bool:
    """Where the counting argument for Kneser graphs is already decisive."""
    return n >= 3 * k and math.comb(n, k) - math.comb(n - 2 * k + 1, k) < math.comb(n - k, k)


# ---------------------------------------------------------------------------
# checks and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    applies: Callable
    assertion: Callable
    corpus: tuple = ()

    def __str__(self):
        return self.id


@dataclass(frozen=True, order=True)
class Counterexample:
    graph6: str
    detail: str
    source: str = ""


@dataclass
class TheoremReport:
    check_id: str
    corpus: str
    tested: int = 0
    skipped: int = 0
    passed: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "corpus": self.corpus,
            "tested": self.tested,
            "skipped": self.skipped,
            "passed": self.passed,
            "counterexamples": [
                {"graph6": c.graph6, "detail": c.detail, "source": c.source} for c in self.counterexamples
            ],
        }


_CHECKS: list = []


def _check(id: str, statement: str, corpus, applies=lambda c: True):
    def deco(fn):
        _CHECKS.append(TheoremCheck(id, statement, applies, fn, tuple(corpus)))
        return fn

    return deco


def builtin_checks() -> list:
    return list(_CHECKS)


def get_check(check_id: str) -> TheoremCheck:
    for c in _CHECKS:
        if c.id == check_id:
            return c
    raise KeyError(f"unknown check {check_id!r}")


def _connected(c, min_n=1):
    return c.connected and c.n >= min_n


def _lab(c, v):
    return c.g.label(v)


def _first(msgs):
    return next((m for m in msgs if m), None)


# -- bounds -----------------------------------------------------------------

@_check(
    "lem-vp-vs-gp",
    "vp(G) >= gp(G) - 1",
    ["n<=7", "family:petersen"],
    lambda c: _connected(c) and c.n <= c.budget.max_gp_vertices,
)
def _vp_vs_gp(c):
    gp = oracle_gp(c.g, c.budget)
    if c.summary.vp < gp - 1:
        return f"vp={c.summary.vp} gp={gp}"


@_check("lem-degree-bound", "p_x >= deg(x); so vp- >= delta and vp >= Delta", ["n<=7", "all<=6"])
def _degree_bound(c):
    for x in range(c.n):
        if c.p[x] < len(c.g.adj[x]):
            return f"p_{_lab(c, x)}={c.p[x]} < deg={len(c.g.adj[x])}"
    mt = c.metrics
    if c.n and (c.summary.vp_minus < mt.min_degree or c.summary.vp < mt.max_degree):
        return "degree bound on vp/vp- fails"


@_check(
    "lem-eccentricity-lower",
    "p_x * e(x) >= n - 1; vp- * diam >= n - 1; vp * rad >= n - 1",
    ["n<=7"],
    lambda c: _connected(c, 2),
)
def _ecc_lower(c):
    mt = c.metrics
    for x in range(c.n):
        if c.p[x] * mt.eccentricity[x] < c.n - 1:
            return f"p_{_lab(c, x)}={c.p[x]} e={mt.eccentricity[x]} n={c.n}"
    if c.summary.vp_minus * mt.diameter < c.n - 1:
        return "vp- * diam < n - 1"
    if c.summary.vp * mt.radius < c.n - 1:
        return "vp * rad < n - 1"


@_check(
    "lem-eccentricity-upper",
    "p_x <= n - e(x); vp <= n - rad; vp- <= n - diam",
    ["n<=7"],
    lambda c: _connected(c),
)
def _ecc_upper(c):
    mt = c.metrics
    for x in range(c.n):
        if c.p[x] > c.n - mt.eccentricity[x]:
            return f"p_{_lab(c, x)}={c.p[x]} > n - e(x) = {c.n - mt.eccentricity[x]}"
    if c.summary.vp > c.n - mt.radius or c.summary.vp_minus > c.n - mt.diameter:
        return "vp/vp- eccentricity bound fails"


@_check(
    "thm-radius3",
    "rad(G) >= 3 implies vp(G) <= n - rad(G) - 1",
    ["n<=7", "range:path:7..20", "range:cycle:6..20", "family:paperG_r:3"],
    lambda c: _connected(c) and c.metrics.radius >= 3,
)
def _radius3(c):
    rad = c.metrics.radius
    if c.summary.vp > c.n - rad - 1:
        return f"vp={c.summary.vp} rad={rad} n={c.n}"


@_check(
    "thm-delta-third",
    "vp- >= ceil((Delta+1)/3); bipartite: vp- >= ceil(Delta/2); both tight",
    ["n<=7", "family:fig_delta_third", "family:fig_bipartite_half"],
    lambda c: _connected(c, 2),
)
def _delta_third(c):
    vpm, delta = c.summary.vp_minus, c.metrics.max_degree
    general = _ceil_div(delta + 1, 3)
    if vpm < general:
        return f"vp-={vpm} < ceil((Delta+1)/3)={general}"
    if is_bipartite(c.g):
        half = _ceil_div(delta, 2)
        if vpm < half:
            return f"bipartite: vp-={vpm} < ceil(Delta/2)={half}"
        if c.family == "fig_bipartite_half" and vpm != half:
            return f"tightness: vp-={vpm} != {half}"
    if c.family == "fig_delta_third" and vpm != general:
        return f"tightness: vp-={vpm} != {general}"


@_check(
    "prop-boundary",
    "the boundary of x is an x-position set; so are the simplicial vertices other than x",
    ["n<=7", "family:fig_boundary", "kst<=9"],
    lambda c: _connected(c, 2),
)
def _boundary(c):
    mt = c.metrics
    for x in range(c.n):
        b = mt.boundary[x]
        if not verify_position_set(c.g, x, b):
            return f"boundary of {_lab(c, x)} is not an x-position set"
        if len(b) > c.p[x]:
            return f"|boundary({_lab(c, x)})|={len(b)} > p_x={c.p[x]}"
        if not verify_position_set(c.g, x, mt.simplicial - {x}):
            return f"simplicial vertices minus {_lab(c, x)} are not an x-position set"
    if c.family == "fig_boundary":
        x = c.g.index("x")
        if len(mt.boundary[x]) != c.p[x]:
            return f"tightness: |boundary(x)|={len(mt.boundary[x])} p_x={c.p[x]}"
    if "kst" in c.params:
        s, t = c.params["kst"]
        for x in range(s, s + t + 1):
            if len(mt.boundary[x]) != t or c.p[x] != s:
                return f"K_{{{s},{t + 1}}}: |boundary|={len(mt.boundary[x])} p_x={c.p[x]}"


@_check(
    "thm-nordhaus-gaddum",
    "n-1 <= vp(G)+vp(co-G) <= 2n-1, equality cases characterised",
    ["all<=6"],
)
def _nordhaus_gaddum(c):
    n = c.n
    total = c.summary.vp + c.co_summary.vp
    if not n - 1 <= total <= 2 * n - 1:
        return f"vp+co-vp={total} outside [{n - 1}, {2 * n - 1}]"
    if n < 2:
        return None
    mt, cm = c.metrics, c.co_metrics
    if total < n - 1 + mt.max_degree - mt.min_degree:
        return f"vp+co-vp={total} < n-1+Delta-delta"
    regular = mt.max_degree == mt.min_degree
    lower = regular and c.summary.vp == mt.max_degree and c.co_summary.vp == cm.max_degree
    if (total == n - 1) != lower:
        return f"lower equality {total == n - 1} but regular/degree condition {lower}"
    degs = degrees(c.g)
    upper = any(d == 0 or d == n - 1 for d in degs)
    if (total == 2 * n - 1) != upper:
        return f"upper equality {total == 2 * n - 1} but isolated/universal vertex {upper}"


@_check(
    "thm-bipartite-alpha",
    "connected bipartite G: vp(G) <= alpha(G), with equality for complete bipartite graphs",
    ["n<=7", "bipartite<=12"],
    lambda c: c.connected and is_bipartite(c.g),
)
def _bipartite_alpha(c):
    alpha = oracle_alpha(c.g, c.budget)
    if c.summary.vp > alpha:
        return f"vp={c.summary.vp} > alpha={alpha}"
    parts = multipartite_parts(c.g)
    if parts is not None and len(parts) == 2 and c.summary.vp != alpha:
        return f"complete bipartite: vp={c.summary.vp} != alpha={alpha}"


@_check(
    "thm-girth",
    "delta >= 2, girth g: p_u <= n - N_u, N_u = #vertices within floor((g-1)/2)-1 of u; tight on Petersen",
    ["n<=7", "family:petersen", "range:cycle:3..20"],
    lambda c: _connected(c) and c.n >= 3 and c.metrics.min_degree >= 2,
)
def _girth(c):
    gir = c.metrics.girth
    r = (int(gir) - 1) // 2
    tight = c.family == "petersen"
    for u in range(c.n):
        dist = bfs_layers(c.g, u).dist
        nu = sum(1 for d in dist if d is not None and d <= r - 1)
        if c.p[u] > c.n - nu:
            return f"p_{_lab(c, u)}={c.p[u]} > n - N = {c.n - nu} (girth {gir})"
        if tight and c.p[u] != c.n - nu:
            return f"tightness: p_{_lab(c, u)}={c.p[u]} != {c.n - nu}"


# -- families ---------------------------------------------------------------

@_check(
    "lem-constant-distance",
    "each component of G[S] lies in one distance layer from x, for x-position sets S",
    ["n<=7", "gnp:200:12"],
    lambda c: _connected(c),
)
def _constant_distance(c):
    for r in c.summary.results:
        dist = bfs_layers(c.g, r.root).dist
        sub = c.g.induced(r.witness)
        ids = sorted(r.witness)
        for comp in sub.components():
            if len({dist[ids[i]] for i in comp}) > 1:
                return f"witness component of root {_lab(c, r.root)} spans several layers"


@_check(
    "cor-join",
    "vp(G1 v G2) = max(n1 + Delta2, n2 + Delta1)",
    ["joins:200:6", "n<=7"],
    lambda c: c.n >= 2 and len(co_components(c.g)) >= 2,
)
def _join(c):
    cc = co_components(c.g)
    a = cc[0]
    b = [v for comp in cc[1:] for v in comp]
    da = max(degrees(c.g.induced(a)), default=0)
    db = max(degrees(c.g.induced(b)), default=0)
    want = max(len(a) + db, len(b) + da)
    if c.summary.vp != want:
        return f"vp={c.summary.vp} != max(n1+D2, n2+D1)={want}"


@_check(
    "thm-multipartite",
    "x in part V_i of K_{n_1..n_r}: p_x = max(n - n_i, n_i - 1); vp = n - n_r",
    ["multipartite<=9"],
    lambda c: (p := multipartite_parts(c.g)) is not None and len(p) >= 2,
)
def _multipartite(c):
    parts = multipartite_parts(c.g)
    for part in parts:
        want = max(c.n - len(part), len(part) - 1)
        for x in part:
            if c.p[x] != want:
                return f"parts {[len(p) for p in parts]}: p_{_lab(c, x)}={c.p[x]} != {want}"
    if c.summary.vp != c.n - len(parts[-1]):
        return f"vp={c.summary.vp} != n - n_r"


@_check(
    "thm-block-graph",
    "block graph: p_x = s(G) - 1 at simplicial x, s(G) elsewhere",
    ["blocks:100:8", "n<=7"],
    lambda c: is_block_graph(c.g),
)
def _block_graph(c):
    simp = c.metrics.simplicial
    s = len(simp)
    for x in range(c.n):
        want = s - 1 if x in simp else s
        if c.p[x] != want:
            return f"p_{_lab(c, x)}={c.p[x]} != {want} (s={s})"


@_check(
    "cor-trees",
    "tree with l leaves: p_x = l - 1 at leaves, l elsewhere",
    ["trees:100:40", "n<=7"],
    lambda c: c.n >= 2 and is_tree(c.g),
)
def _trees(c):
    lv = set(leaves(c.g))
    for x in range(c.n):
        want = len(lv) - 1 if x in lv else len(lv)
        if c.p[x] != want:
            return f"p_{_lab(c, x)}={c.p[x]} != {want} (l={len(lv)})"


@_check(
    "thm-kneser",
    "vp(K(n,k)) = C(n-k, k) where the counting guard holds",
    ["family:kneser:10,2", "family:kneser:11,2", "family:kneser:12,2", "family:kneser:9,2", "family:kneser:12,3"],
    lambda c: c.family == "kneser" and kneser_guard(c.params["n"], c.params["k"]),
)
def _kneser(c):
    n, k = c.params["n"], c.params["k"]
    want = math.comb(n - k, k)
    if c.summary.vp != want or c.summary.vp_minus != want:
        return f"K({n},{k}): vp={c.summary.vp} vp-={c.summary.vp_minus} != {want}"


@_check(
    "lem-G-r",
    "vp-(G(r)) = r at x, vp(G(r)) = 6r - 4 at u4,1, gp(G(3)) = 6",
    ["range:paperG_r:3..6"],
    lambda c: c.family == "paperG_r" and c.params["r"] >= 3,
)
def _g_r(c):
    r = c.params["r"]
    s = c.summary
    x, u41 = c.g.index("x"), c.g.index("u4,1")
    if s.vp_minus != r or x not in s.argmin:
        return f"r={r}: vp-={s.vp_minus} (want {r} at x)"
    if s.vp != 6 * r - 4 or u41 not in s.argmax:
        return f"r={r}: vp={s.vp} (want {6 * r - 4} at u4,1)"
    if r == 3:
        gp = oracle_gp(c.g, OracleBudget(max_gp_vertices=22, max_nodes=c.budget.max_nodes))
        if gp != 2 * r:
            return f"r=3: gp={gp} != 6"


@_check("fam-cycles", "cycles: p_x = 2 at every root", ["range:cycle:3..50"], lambda c: is_cycle(c.g))
def _fam_cycles(c):
    if set(c.p) != {2}:
        return f"C_{c.n}: values {sorted(set(c.p))}"


@_check("fam-complete", "complete graphs: p_x = n - 1", ["range:complete:1..12"], lambda c: is_complete(c.g))
def _fam_complete(c):
    if set(c.p) != {c.n - 1}:
        return f"K_{c.n}: values {sorted(set(c.p))}"


@_check(
    "fam-paths",
    "paths: p_x = 1 at both ends, 2 inside",
    ["range:path:2..20"],
    lambda c: c.n >= 2 and is_path(c.g),
)
def _fam_paths(c):
    for x in range(c.n):
        want = 1 if len(c.g.adj[x]) <= 1 else 2
        if c.p[x] != want:
            return f"P_{c.n}: p_{x}={c.p[x]} != {want}"


@_check(
    "fam-cocktail",
    "K_{2r} minus a perfect matching: p_x = n - 2",
    ["range:cocktail:2..6"],
    lambda c: c.n >= 4 and is_cocktail_party(c.g),
)
def _fam_cocktail(c):
    if set(c.p) != {c.n - 2}:
        return f"n={c.n}: values {sorted(set(c.p))}"


@_check("fam-petersen", "Petersen graph: p_x = 6 at every root", ["family:petersen"], lambda c: c.family == "petersen")
def _fam_petersen(c):
    if set(c.p) != {6}:
        return f"values {sorted(set(c.p))}"


# -- characterisations ------------------------------------------------------

_CENSUS8 = ["n<=8"]


@_check(
    "cor-path-char",
    "vp- = 1 iff G is a path; vp = 1 iff G = K_2 (connected, n >= 2)",
    _CENSUS8,
    lambda c: _connected(c, 2),
)
def _path_char(c):
    if (c.summary.vp_minus == 1) != is_path(c.g):
        return f"vp-={c.summary.vp_minus} but path={is_path(c.g)}"
    if (c.summary.vp == 1) != (c.n == 2):
        return f"vp={c.summary.vp} with n={c.n}"


@_check(
    "cor-universal",
    "vp = n - 1 iff G has a universal vertex; vp- = n - 1 iff G is complete",
    _CENSUS8,
    lambda c: _connected(c, 2),
)
def _universal(c):
    uni = bool(universal_vertices(c.g))
    if (c.summary.vp == c.n - 1) != uni:
        return f"vp={c.summary.vp} but universal vertex={uni}"
    if (c.summary.vp_minus == c.n - 1) != is_complete(c.g):
        return f"vp-={c.summary.vp_minus} but complete={is_complete(c.g)}"


@_check(
    "cor-cycles",
    "vp- = vp = 2 iff G is a cycle; vp = 2 iff G is a cycle or a path on >= 3 vertices",
    _CENSUS8,
    lambda c: _connected(c, 2),
)
def _cycles(c):
    s = c.summary
    cyc = is_cycle(c.g)
    if (s.vp_minus == s.vp == 2) != cyc:
        return f"vp-={s.vp_minus} vp={s.vp} but cycle={cyc}"
    pc = cyc or (is_path(c.g) and c.n >= 3)
    if (s.vp == 2) != pc:
        return f"vp={s.vp} but cycle-or-long-path={pc}"


def _n_minus_2_literal(g: Graph, u: int, cuts) -> bool:
    n = g.n
    if len(g.adj[u]) == n - 2:
        return True
    full = (1 << n) - 1
    closed_u = g.mask[u] | (1 << u)
    return any(v in cuts and (closed_u | g.mask[v] | (1 << v)) == full for v in g.adj[u])


def _n_minus_2_refined(g: Graph, u: int) -> bool:
    if len(g.adj[u]) == g.n - 2:
        return True
    lay = bfs_layers(g, u)
    if lay.ecc != 2:
        return False
    nu = g.mask[u]
    hubs = {v for v in g.adj[u]}
    for y in lay.layers[2]:
        hubs &= {v for v in g.adj[y] if nu >> v & 1}
        if len(hubs) != 1 or (g.mask[y] & nu).bit_count() != 1:
            return False
    return bool(hubs)


@_check(
    "lem-n-minus-2",
    "p_u = n - 2 iff deg u = n - 2, or u has a cutvertex neighbour v with {u, v} dominating G",
    _CENSUS8,
    lambda c: _connected(c, 2),
)
def _n_minus_2(c):
    cuts = c.metrics.cut_vertices
    for u in range(c.n):
        num = c.p[u] == c.n - 2
        struct = _n_minus_2_literal(c.g, u, cuts)
        if num != struct:
            return f"u={_lab(c, u)}: p_u={c.p[u]} (n-2={c.n - 2}) but structural condition {struct}"


@_check(
    "lem-n-minus-2-refined",
    "p_u = n - 2 iff deg u = n - 2, or e(u) = 2 and one neighbour v is the only neighbour in N(u) of every vertex at distance 2",
    _CENSUS8,
    lambda c: _connected(c, 2),
)
def _n_minus_2_ref(c):
    for u in range(c.n):
        num = c.p[u] == c.n - 2
        struct = _n_minus_2_refined(c.g, u)
        if num != struct:
            return f"u={_lab(c, u)}: p_u={c.p[u]} (n-2={c.n - 2}) but structural condition {struct}"
        if struct and len(c.g.adj[u]) != c.n - 2:
            v = next(v for v in c.g.adj[u] if all(c.g.has_edge(v, y) for y in bfs_layers(c.g, u).layers[2]))
            rest = [w for w in range(c.n) if w not in (u, v)]
            if not verify_position_set(c.g, u, rest):
                return f"u={_lab(c, u)}: V - {{u, {_lab(c, v)}}} is not a u-position set"


@_check(
    "thm-k222",
    "n >= 4: vp- = vp = n - 2 iff G is K_{2,...,2}",
    _CENSUS8 + ["range:cocktail:2..6"],
    lambda c: c.n >= 4 and c.connected,
)
def _k222(c):
    s = c.summary
    num = s.vp_minus == s.vp == c.n - 2
    if num != is_cocktail_party(c.g):
        return f"vp-={s.vp_minus} vp={s.vp} but cocktail party={is_cocktail_party(c.g)}"


@_check(
    "thm-n2-n1",
    "n >= 4: vp- = n - 2 and vp = n - 1 iff G is K_n minus a non-empty non-perfect matching or K_1 joined to >= 2 disjoint cliques",
    _CENSUS8,
    lambda c: c.n >= 4 and c.connected,
)
def _n2_n1(c):
    s = c.summary
    num = s.vp_minus == c.n - 2 and s.vp == c.n - 1
    msize = deleted_matching_size(c.g)
    clique_minus = msize is not None and 0 < msize < c.n / 2
    struct = clique_minus or is_k1_join_cliques(c.g)
    if num != struct:
        return f"vp-={s.vp_minus} vp={s.vp} but structural condition {struct}"


@_check(
    "lem-cutvertex-free",
    "every root has a maximum x-position set avoiding the cutvertices",
    ["n<=8"],
    lambda c: _connected(c, 2) and c.n <= c.budget.max_vertices,
)
def _cutvertex_free(c):
    cuts = c.metrics.cut_vertices
    if not cuts:
        return None
    for x in range(c.n):
        got = oracle_px(c.g, x, c.budget, avoid=cuts - {x}).value
        if got != c.p[x]:
            return f"root {_lab(c, x)}: best set avoiding cutvertices has {got} < p_x={c.p[x]}"


# -- solver cross-checks ------------------------------------------------------

@_check(
    "solver-oracle",
    "the antichain solver agrees with exhaustive search at every root",
    ["n<=8", "gnp:1000:12"],
    lambda c: c.n <= c.budget.max_vertices,
)
def _solver_oracle(c):
    for x in range(c.n):
        o = oracle_px(c.g, x, c.budget)
        if o.value != c.p[x]:
            return f"root {_lab(c, x)}: solver {c.p[x]} oracle {o.value}"
        if not verify_position_set(c.g, x, o.witness):
            return f"root {_lab(c, x)}: oracle witness invalid"


@_check(
    "algorithm-a",
    "the queue-driven construction of G*_x - x matches the geodesic order",
    ["n<=7"],
    lambda c: _connected(c, 2),
)
def _algorithm_a(c):
    for x in range(c.n):
        pairs = {(min(a, b), max(a, b)) for a, b in geodesic_order(c.g, x).pairs()}
        if algorithm_a_edges(c.g, x) != pairs:
            return f"root {_lab(c, x)}: edge sets differ"


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------

def _range(text: str):
    a, _, b = text.partition("..")
    return range(int(a), int(b or a) + 1)


def _census(kind, k, limit):
    if k > limit:
        raise ValueError(f"{kind} census available up to n={limit}")
    for n in range(1, k + 1):
        for g in read_census(kind, n):
            yield Sample(g, {}, f"{kind}{n}")


def _partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def build_corpus(desc: str, seed: int = 0) -> list:
    """Expand a corpus descriptor into samples (deterministic given ``seed``)."""
    desc = desc.strip()
    rng = random.Random(f"{seed}/{desc}")
    head, _, rest = desc.partition(":")
    if desc.startswith(("n<=", "connected<=")):
        return list(_census("connected", int(desc.split("<=")[1]), MAX_CENSUS_CONNECTED))
    if desc.startswith("all<="):
        return list(_census("graphs", int(desc[5:]), MAX_CENSUS_ALL))
    if desc.startswith("multipartite<="):
        k = int(desc.split("<=")[1])
        out = []
        for total in range(2, k + 1):
            for parts in _partitions(total):
                if len(parts) >= 2:
                    out.append(Sample(complete_multipartite(parts), {"family": "multipartite", "parts": parts}, desc))
        return out
    if desc.startswith("bipartite<="):
        k = int(desc.split("<=")[1])
        return [
            Sample(complete_multipartite((s, t)), {"family": "bipartite", "parts": (s, t)}, desc)
            for s in range(1, k) for t in range(1, s + 1) if s + t <= k
        ]
    if desc.startswith("kst<="):
        # K_{s,t+1} with s >= t >= 1; the t+1 side is numbered last
        k = int(desc.split("<=")[1])
        return [
            Sample(complete_multipartite((s, t + 1)), {"family": "bipartite", "kst": (s, t)}, desc)
            for s in range(1, k) for t in range(1, s + 1) if s + t + 1 <= k
        ]
    if head == "family":
        spec = parse_family(rest)
        return [Sample(generate(spec), spec.params(), desc)]
    if head == "range":
        fam, _, span = rest.rpartition(":")
        out = []
        for i in _range(span):
            spec = parse_family(f"{fam}:{i}")
            out.append(Sample(generate(spec), spec.params(), f"{fam}:{i}"))
        return out
    if head in ("trees", "blocks", "gnp", "joins"):
        count, _, size = rest.partition(":")
        count, size = int(count), int(size)
        out = []
        for i in range(count):
            s = rng.randrange(2**32)
            if head == "trees":
                n = 2 + rng.randrange(size - 1)
                out.append(Sample(random_tree(n, seed=s), {"family": "tree", "n": n, "seed": s}, f"tree:{n},seed={s}"))
            elif head == "blocks":
                b = 1 + rng.randrange(size)
                out.append(Sample(random_block_graph(b, 4, seed=s), {"family": "block", "seed": s}, f"block:{b},4,seed={s}"))
            elif head == "gnp":
                n = 1 + rng.randrange(size)
                p = round(0.1 + 0.8 * rng.random(), 3)
                out.append(Sample(gnp(n, p, seed=s), {"family": "gnp", "seed": s}, f"gnp:{n},{p},seed={s}"))
            else:
                n1, n2 = 1 + rng.randrange(size), 1 + rng.randrange(size)
                p1, p2 = round(rng.random(), 3), round(rng.random(), 3)
                g = join(gnp(n1, p1, seed=s), gnp(n2, p2, seed=s + 1))
                out.append(Sample(g, {"family": "join", "n1": n1, "n2": n2}, f"join:{n1},{n2},seed={s}"))
        return out
    spec = parse_family(desc)
    return [Sample(generate(spec), spec.params(), desc)]


def expand_corpus(corpus, seed: int = 0) -> tuple:
    """Normalise descriptors, graphs or samples to ``(description, samples)``."""
    if corpus is None:
        raise ValueError("no corpus given")
    if isinstance(corpus, str):
        corpus = [corpus]
    corpus = list(corpus)
    if all(isinstance(c, str) for c in corpus):
        samples = [s for d in corpus for s in build_corpus(d, seed)]
        return "; ".join(corpus), samples
    samples = [c if isinstance(c, Sample) else Sample(c, {}, "given") for c in corpus]
    return f"{len(samples)} given graphs", samples


# ---------------------------------------------------------------------------
# running
# ---------------------------------------------------------------------------

def _evaluate(check: TheoremCheck, sample: Sample, strict: bool, budget: OracleBudget):
    """``None`` when skipped, ``""`` on pass, otherwise a diagnostic."""
    ctx = Context(sample, strict, budget)
    try:
        if not check.applies(ctx):
            return None
        msg = check.assertion(ctx)
    except BudgetExceeded as exc:
        return f"budget exceeded: {exc}"
    except Exception as exc:  # solver failures become counterexamples
        return f"{type(exc).__name__}: {exc}"
    return msg or ""


def run_check(
    check: TheoremCheck | str,
    corpus=None,
    *,
    seed: int = 0,
    strict: bool = True,
    workers: int = 1,
    budget: OracleBudget = OracleBudget(),
) -> TheoremReport:
    """Evaluate ``check`` on every applicable graph of ``corpus``.

    ``corpus`` defaults to the check's own descriptors; it may also be one
    descriptor, a list of descriptors, or an iterable of graphs/samples.
    """
    if isinstance(check, str):
        check = get_check(check)
    desc, samples = expand_corpus(check.corpus if corpus is None else corpus, seed)
    start = time.perf_counter()

    def one(sample):
        return _evaluate(check, sample, strict, budget)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(one, samples))
    else:
        outcomes = [one(s) for s in samples]

    report = TheoremReport(check.id, desc)
    cex = []
    for sample, msg in zip(samples, outcomes):
        if msg is None:
            report.skipped += 1
            continue
        report.tested += 1
        if msg:
            cex.append(Counterexample(encode_graph6(sample.graph).decode(), msg, sample.source))
        else:
            report.passed += 1
    report.counterexamples = sorted(cex)
    report.seconds = time.perf_counter() - start
    return report


def run_checks(checks: Iterable, corpus=None, **kw) -> list:
    return [run_check(c, corpus, **kw) for c in checks]


def ratio_summary(corpus, seed: int = 0) -> dict:
    """Largest vp / vp- seen over the connected graphs of a corpus (informational)."""
    _, samples = expand_corpus(corpus, seed)
    best = None
    for s in samples:
        g = s.graph
        if g.n < 2 or not g.is_connected():
            continue
        summ = _summary(g, False)
        frac = (summ.vp, summ.vp_minus)
        if best is None or frac[0] * best[1] > best[0] * frac[1]:
            best = (*frac, encode_graph6(g).decode())
    if best is None:
        return {"max_ratio": None}
    return {"max_ratio": best[0] / best[1], "vp": best[0], "vp_minus": best[1], "graph6": best[2]}

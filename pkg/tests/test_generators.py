import itertools
import math

import networkx as nx
import pytest

from conftest import to_nx
from vertexpos.census import canonical_form, next_census
from vertexpos.generators import (
    FAMILIES,
    complete_multipartite,
    cocktail_party,
    enumerate_small_connected,
    enumerate_small_graphs,
    generate,
    gnp,
    kneser,
    paper_g_r,
    parse_family,
    random_block_graph,
    random_tree,
)
from vertexpos.graph import Graph, complement, cut_vertices, encode_graph6, metrics, parse_graph6
from vertexpos.theorems import is_block_graph, is_tree

# OEIS A001349 and A000088
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]
ALL = [1, 2, 4, 11, 34, 156, 1044]


def test_census_counts():
    for n, want in enumerate(CONNECTED, start=1):
        gs = list(enumerate_small_connected(n))
        assert len(gs) == want
        assert all(g.n == n and g.is_connected() for g in gs)
    for n, want in enumerate(ALL, start=1):
        assert len(list(enumerate_small_graphs(n))) == want


def _brute_force_connected(n):
    """Labelled enumeration with isomorphism rejection by trying all permutations."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    reps = []
    for bits in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)
        if not Graph(n, edges).is_connected():
            continue
        keys = {frozenset((min(pi[a], pi[b]), max(pi[a], pi[b])) for a, b in edges) for pi in perms}
        if not any(r in keys for r in reps):
            reps.append(edges)
    return reps


@pytest.mark.parametrize("n, want", [(3, 2), (4, 6), (5, 21)])
def test_census_matches_brute_force(n, want):
    reps = _brute_force_connected(n)
    assert len(reps) == want
    census = {canonical_form(g) for g in enumerate_small_connected(n)}
    assert {canonical_form(Graph(n, e)) for e in reps} == census


def test_census_matches_networkx_atlas():
    by_n = {}
    for h in nx.graph_atlas_g()[1:]:
        g = Graph(h.number_of_nodes(), h.edges())
        by_n.setdefault(g.n, set()).add(canonical_form(g))
    for n in range(1, 8):
        ours = {canonical_form(g) for g in enumerate_small_graphs(n)}
        assert ours == by_n[n]
        conn = {canonical_form(g) for g in enumerate_small_connected(n)}
        assert conn == {c for c in by_n[n] if parse_graph6(c).is_connected()}


def test_canonical_form_is_invariant():
    g = gnp(8, 0.4, seed=3)
    for perm in itertools.islice(itertools.permutations(range(8)), 0, 5000, 97):
        h = Graph(8, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_form(h) == canonical_form(g)


def test_next_census_small():
    two = [parse_graph6(c) for c in next_census([Graph(1)], connected=True)]
    three = next_census(two, connected=True)
    assert len(two) == 1 and len(three) == 2


# -- families ---------------------------------------------------------------------

def test_family_examples():
    c6 = generate("cycle:6")
    assert c6.n == 6 and c6.m == 6 and all(c6.degree(v) == 2 for v in range(6))
    p = kneser(5, 2)
    assert p.n == 10 and p.m == 15 and metrics(p).girth == 5
    assert nx.is_isomorphic(to_nx(p), nx.petersen_graph())
    g3 = paper_g_r(3)
    assert g3.n == 22 and g3.degree(g3.index("u4,1")) == 2
    k222 = complete_multipartite([2, 2, 2])
    assert k222 == cocktail_party(3)
    assert complement(k222).m == 3 and all(d == 1 for d in map(len, complement(k222).adj))


def test_kneser_counts():
    for n, k in [(6, 2), (7, 3), (10, 2)]:
        g = kneser(n, k)
        assert g.n == math.comb(n, k)
        assert all(g.degree(v) == math.comb(n - k, k) for v in range(g.n))


def test_paper_g_r_shape():
    for r in range(2, 7):
        g = paper_g_r(r)
        assert g.n == 7 * r + 1 and g.is_connected()
        spine = [g.index(f"u{i},1") for i in range(2, 7)]
        for a, b in zip(spine, spine[1:]):
            assert g.has_edge(a, b)
        for i in (3, 4, 5):
            assert g.degree(g.index(f"u{i},1")) == 2


def test_random_families_are_seeded():
    assert random_tree(30, seed=5) == random_tree(30, seed=5)
    assert random_tree(30, seed=5) != random_tree(30, seed=6)
    assert gnp(40, 0.2, seed=1) == generate("gnp:40,0.2,seed=1")
    for seed in range(30):
        t = random_tree(25, seed=seed)
        assert is_tree(t) and t.n == 25
        b = random_block_graph(6, 4, seed=seed)
        assert is_block_graph(b)
        assert len(cut_vertices(b)) <= 5


def test_random_tree_is_uniform_over_labelled_trees():
    # n^(n-2) = 16 labelled trees on 4 vertices, each should appear
    seen = {encode_graph6(random_tree(4, seed=s)) for s in range(400)}
    assert len(seen) == 16


def test_parse_family():
    fs = parse_family("kneser:7,2")
    assert fs.family == "kneser" and fs.args == (7, 2)
    assert parse_family("completeMultipartite:3,2,2").family == "multipartite"
    assert parse_family("gnp:20,0.3,seed=42").options == {"seed": 42}
    assert str(parse_family("gnp:20,0.3,seed=42")) == "gnp:20,0.3,seed=42"
    assert parse_family("paperG_r:4").params() == {"r": 4, "family": "paperG_r"}


@pytest.mark.parametrize("bad", ["cycle:2", "kneser:3,2", "nosuch:3", "cycle", "cycle:a", "bipartite:1,2,3"])
def test_family_errors(bad):
    with pytest.raises(ValueError):
        generate(bad)


def test_every_family_name_generates():
    samples = {
        "path": "path:4", "cycle": "cycle:4", "complete": "complete:3", "empty": "empty:3",
        "star": "star:3", "multipartite": "multipartite:2,1", "bipartite": "bipartite:2,2",
        "cocktail": "cocktail:2", "tree": "tree:6", "block": "block:3", "kneser": "kneser:5,2",
        "petersen": "petersen", "paperG_r": "paperG_r:2", "gnp": "gnp:6,0.5",
    }
    for fam in FAMILIES:
        g = generate(samples.get(fam, fam))
        assert g.n >= 1


def test_fixtures():
    fig1 = generate("paperFig1")
    assert fig1.n == 13 and fig1.m == 54 and fig1.labels[:2] == ("x", "c1")
    assert generate("fig_boundary").labels[:2] == ("x", "y")
    assert generate("fig_reduced").n == 9

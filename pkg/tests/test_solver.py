import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from vertexpos.generators import (
    complete,
    complete_multipartite,
    cycle,
    generate,
    gnp,
    paper_g_r,
    path,
    petersen,
    star,
)
from vertexpos.graph import Graph, boundary
from vertexpos.oracle import oracle_px
from vertexpos.solver import (
    algorithm_a_edges,
    algorithm_a_value,
    boundary_position_set,
    geodesic_order,
    max_antichain,
    reduced_graph,
    solve_all,
    solve_px,
    verify_position_set,
)


def geodesic_pairs_by_enumeration(g, x):
    """(u, v) with u != x on some enumerated shortest x, v-path."""
    h = to_nx(g)
    pairs = set()
    for v in nx.node_connected_component(h, x):
        if v == x:
            continue
        for p in nx.all_shortest_paths(h, x, v):
            pairs.update((u, v) for u in p[1:-1])
    return pairs


# -- geodesic order -------------------------------------------------------------

def test_order_examples():
    assert geodesic_order(path(4), 0).pairs() == {(1, 2), (1, 3), (2, 3)}
    c4 = geodesic_order(cycle(4), 0)
    assert c4.pairs() == {(1, 2), (3, 2)}
    assert not c4.less(1, 3) and not c4.less(3, 1)
    assert c4.masks() == {1: 1 << 2, 2: 0, 3: 1 << 2}


def test_order_on_fig1_matches_enumerated_geodesics():
    g = generate("paperFig1")
    for x in range(g.n):
        assert geodesic_order(g, x).pairs() == geodesic_pairs_by_enumeration(g, x)
    order = geodesic_order(g, g.index("x"))
    cs = [g.index(f"c{i}") for i in range(1, 5)]
    assert order.is_antichain(cs)


@given(graphs(max_n=9))
def test_order_matches_enumeration(g):
    for x in range(g.n):
        assert geodesic_order(g, x).pairs() == geodesic_pairs_by_enumeration(g, x)


def test_antichain_of_c6_order():
    order = geodesic_order(cycle(6), 0)
    best = max(
        len(s) for r in range(6) for s in itertools.combinations(range(1, 6), r) if order.is_antichain(s)
    )
    assert best == 2 == len(max_antichain(order))


def test_reduced_graph_fixture():
    g = generate("fig_reduced")
    lab = g.labels
    red = reduced_graph(g, 0)
    dropped = {tuple(sorted((lab[u], lab[v]))) for u, v in set(g.edges()) - set(red.edges())}
    assert dropped == {("v2", "v6"), ("v5", "v6"), ("v3", "v7")}
    want = {
        ("v5", "v4"), ("v6", "v4"), ("v4", "v8"), ("v5", "v8"), ("v6", "v8"), ("v5", "v7"),
        ("v2", "v7"), ("v2", "v3"), ("v7", "v9"), ("v3", "v9"), ("v5", "v9"), ("v2", "v9"),
    }
    got = {(lab[u], lab[v]) for u, v in geodesic_order(g, 0).pairs()}
    assert got == want
    assert solve_px(g, 0).value == solve_px(red, 0).value


# -- Algorithm A transcription ----------------------------------------------------

def test_algorithm_a_readings_on_p4():
    p4 = path(4)
    assert algorithm_a_edges(p4, 0, "uw") == {(1, 2), (1, 3), (2, 3)}
    # joining u to the dequeued vertex instead loses 1 < 3
    assert (1, 3) not in algorithm_a_edges(p4, 0, "uv")
    with pytest.raises(ValueError):
        algorithm_a_edges(p4, 0, "vw")


@given(graphs(max_n=8, connected=True))
def test_algorithm_a_matches_order(g):
    for x in range(g.n):
        comparable = {(min(a, b), max(a, b)) for a, b in geodesic_order(g, x).pairs()}
        assert algorithm_a_edges(g, x) == comparable
        assert algorithm_a_value(g, x) == solve_px(g, x).value


# -- position sets ----------------------------------------------------------------

def test_verify_examples():
    assert not verify_position_set(path(4), 0, {1, 3})
    assert verify_position_set(cycle(6), 0, {2, 4})
    g = generate("paperFig1")
    assert verify_position_set(g, 0, set(g.adj[0]))


@given(graphs(max_n=10))
def test_neighbourhood_is_a_position_set(g):
    for x in range(g.n):
        assert verify_position_set(g, x, g.adj[x])


@given(graphs(max_n=9))
def test_verify_matrix_and_bfs_paths_agree(g):
    from vertexpos.graph import distance_matrix

    D = distance_matrix(g)
    rng = random.Random(g.n * 1000 + g.m)
    for x in range(g.n):
        for _ in range(5):
            s = {v for v in range(g.n) if rng.random() < 0.4}
            assert verify_position_set(g, x, s) == verify_position_set(g, x, s, dist=D)


def test_boundary_examples():
    g = generate("fig_boundary")
    x = g.index("x")
    b = boundary_position_set(g, x)
    assert {g.label(v) for v in b} == {"u1", "u3", "u6"}
    assert len(b) == solve_px(g, x).value
    for s in range(1, 6):
        for t in range(1, s + 1):
            k = complete_multipartite([s, t + 1])
            xs = s  # first vertex of the (t+1)-side
            assert len(boundary_position_set(k, xs)) == t
            assert solve_px(k, xs).value == s
    assert boundary_position_set(complete(5), 2) == {0, 1, 3, 4}


# -- p_x values ---------------------------------------------------------------------

def test_px_examples():
    assert {solve_px(petersen(), x).value for x in range(10)} == {6}
    for n in range(3, 12):
        assert {solve_px(cycle(n), x).value for x in range(n)} == {2}
    assert {solve_px(complete(5), x).value for x in range(5)} == {4}
    assert solve_px(path(5), 0).value == 1 and solve_px(path(5), 4).value == 1


def test_table1_values():
    g = generate("paperFig1")
    got = {lab: solve_px(g, g.index(lab), check=True).value for lab in ("x", "c1", "b1", "a1")}
    assert got == {"x": 4, "c1": 8, "b1": 11, "a1": 7}


def test_multipartite_examples():
    k35 = complete_multipartite([3, 5])
    assert solve_px(k35, 3).value == 4  # 5-side
    assert solve_px(k35, 0).value == 5  # 3-side


def test_solve_all_examples():
    g = paper_g_r(3)
    s = solve_all(g, check=True)
    assert s.vp_minus == 3 and g.index("x") in s.argmin
    assert s.vp == 14 and g.index("u4,1") in s.argmax
    k222 = complete_multipartite([2, 2, 2])
    s = solve_all(k222)
    assert s.vp == s.vp_minus == 4
    s = solve_all(star(6))
    assert s.vp == 6 and s.argmax == {0}


def test_conventions_for_trivial_and_disconnected():
    r = solve_px(Graph(1), 0)
    assert r.value == 0 and r.witness == ()
    # isolated root: nothing it can reach, so every vertex is allowed
    g = Graph(4, [(1, 2), (2, 3)])
    assert solve_px(g, 0).witness == (0, 1, 2, 3)
    # vertices outside the root's component always join the witness
    r = solve_px(g, 1)
    assert 0 in r.witness and r.value == 2
    with pytest.raises(IndexError):
        solve_px(g, 4)


@given(graphs(max_n=9))
def test_solver_matches_oracle(g):
    for x in range(g.n):
        r = solve_px(g, x, check=True)
        o = oracle_px(g, x)
        assert r.value == o.value
        assert verify_position_set(g, x, r.witness)
        assert r.value >= g.degree(x)


@given(graphs(max_n=9, connected=True))
def test_relabelling_invariance(g):
    rng = random.Random(g.m)
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    a, b = solve_all(g), solve_all(h)
    assert all(a.values[v] == b.values[perm[v]] for v in range(g.n))


def test_threaded_and_serial_agree():
    g = gnp(120, 0.05, seed=9)
    a = solve_all(g, workers=1)
    b = solve_all(g, workers=3)
    assert a.values == b.values
    assert [r.witness for r in a.results] == [r.witness for r in b.results]


def test_json_shapes():
    r = solve_px(cycle(6), 0)
    assert r.to_json() == {"n": 6, "root": 0, "p_x": 2, "witness": list(r.witness), "method": "polynomial"}
    s = solve_all(cycle(4)).to_json()
    assert s == {"n": 4, "vp": 2, "vp_minus": 2, "argmax": [0, 1, 2, 3], "argmin": [0, 1, 2, 3], "p": [2, 2, 2, 2]}

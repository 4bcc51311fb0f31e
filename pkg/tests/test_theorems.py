import json
import math

import pytest

from vertexpos.generators import complete, complete_multipartite, cycle, generate, path, star
from vertexpos.graph import Graph, encode_graph6, join, parse_graph6
from vertexpos.oracle import oracle_px
from vertexpos.solver import solve_all
from vertexpos.theorems import (
    Sample,
    TheoremCheck,
    build_corpus,
    builtin_checks,
    deleted_matching_size,
    get_check,
    is_block_graph,
    is_cocktail_party,
    is_k1_join_cliques,
    kneser_guard,
    multipartite_parts,
    ratio_summary,
    run_check,
)

SPEC_IDS = {
    "lem-vp-vs-gp", "lem-degree-bound", "lem-eccentricity-lower", "cor-path-char", "cor-join",
    "thm-delta-third", "lem-eccentricity-upper", "thm-radius3", "prop-boundary", "thm-nordhaus-gaddum",
    "lem-constant-distance", "thm-bipartite-alpha", "thm-multipartite", "thm-block-graph", "cor-trees",
    "thm-girth", "thm-kneser", "cor-universal", "cor-cycles", "lem-n-minus-2", "thm-k222", "thm-n2-n1",
    "lem-G-r", "lem-cutvertex-free",
}


def test_builtin_checks_are_unique_and_complete():
    ids = [c.id for c in builtin_checks()]
    assert len(ids) >= 24 and len(ids) == len(set(ids))
    assert SPEC_IDS <= set(ids)
    for c in builtin_checks():
        assert c.corpus, c.id


def _counts_ok(rep):
    return rep.passed + len(rep.counterexamples) == rep.tested


def test_degree_bound_on_connected_census():
    rep = run_check("lem-degree-bound", "n<=7")
    assert rep.ok and rep.tested == 1 + 1 + 2 + 6 + 21 + 112 + 853 and _counts_ok(rep)


def test_nordhaus_gaddum_on_all_graphs():
    rep = run_check("thm-nordhaus-gaddum", "all<=6")
    assert rep.ok and rep.tested == 1 + 2 + 4 + 11 + 34 + 156


def test_trees_on_random_trees():
    rep = run_check("cor-trees", "trees:100:40")
    assert rep.ok and rep.tested == 100


def test_multipartite_sweep():
    rep = run_check("thm-multipartite", "multipartite<=9")
    # partitions of 2..9 into at least two parts
    assert rep.tested == sum(_partitions(m) - 1 for m in range(2, 10))
    assert rep.ok


def _partitions(m):
    table = [1] + [0] * m
    for part in range(1, m + 1):
        for s in range(part, m + 1):
            table[s] += table[s - part]
    return table[m]


def test_kneser_check_and_guard():
    rep = run_check("thm-kneser", "family:kneser:10,2")
    assert rep.ok and rep.tested == 1
    assert solve_all(generate("kneser:10,2")).vp == 28 == math.comb(8, 2)
    assert kneser_guard(10, 2) and kneser_guard(11, 2) and kneser_guard(12, 2)
    assert not kneser_guard(9, 2) and not kneser_guard(5, 2) and not kneser_guard(12, 3)
    skipped = run_check("thm-kneser", "family:kneser:9,2")
    assert skipped.tested == 0 and skipped.skipped == 1


def test_inapplicable_graphs_are_skipped():
    rep = run_check("thm-radius3", [complete(4), cycle(5)])
    assert rep.tested == 0 and rep.skipped == 2 and rep.ok
    rep = run_check("lem-G-r", [Graph(1), Graph(0)])
    assert rep.tested == 0


def test_false_claim_yields_replayable_counterexamples():
    bogus = TheoremCheck("bogus", "vp is 2", lambda c: c.n >= 2, lambda c: None if c.summary.vp == 2 else "vp != 2")
    rep = run_check(bogus, [cycle(5), path(4), star(3)])
    assert rep.tested == 3 and rep.passed == 2 and _counts_ok(rep)
    (cex,) = rep.counterexamples
    assert parse_graph6(cex.graph6) == star(3)


def test_solver_failure_is_recorded():
    def boom(c):
        raise RuntimeError("kaput")

    rep = run_check(TheoremCheck("boom", "", lambda c: True, boom), [path(3)])
    assert rep.tested == 1 and "kaput" in rep.counterexamples[0].detail


def test_reports_are_deterministic():
    a = run_check("cor-join", "joins:40:5", seed=3).to_json()
    b = run_check("cor-join", "joins:40:5", seed=3).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    c = build_corpus("gnp:20:8", seed=4)
    d = build_corpus("gnp:20:8", seed=4)
    assert [s.graph for s in c] == [s.graph for s in d]
    assert [s.graph for s in c] != [s.graph for s in build_corpus("gnp:20:8", seed=5)]


def test_literal_n_minus_2_counterexample():
    # u=1 ~ v=0 (a cutvertex, since the pendant 4 hangs on it) and {u, v}
    # dominates, yet y=3 sees both neighbours of u, so p_u = 2, not n - 2
    g = parse_graph6("DB{")
    assert g.n == 5
    rep = run_check("lem-n-minus-2", [g])
    assert not rep.ok
    u = int(rep.counterexamples[0].detail.split(":")[0].split("=")[1])
    assert oracle_px(g, u).value == 2 == solve_all(g).values[u]
    assert run_check("lem-n-minus-2-refined", [g]).ok


def test_recognisers():
    assert is_cocktail_party(complete_multipartite([2, 2, 2]))
    assert not is_cocktail_party(cycle(5))
    assert multipartite_parts(complete_multipartite([3, 1, 2])) is not None
    assert multipartite_parts(cycle(5)) is None
    assert deleted_matching_size(complete(5)) == 0
    k5m = Graph(5, [e for e in complete(5).edges() if e != (0, 1)])
    assert deleted_matching_size(k5m) == 1
    assert deleted_matching_size(path(4)) is None
    assert is_k1_join_cliques(join(Graph(1), Graph(5, [(0, 1), (2, 3), (2, 4), (3, 4)])))
    assert not is_k1_join_cliques(complete(4))
    assert is_block_graph(path(5)) and not is_block_graph(cycle(4))


def test_corpus_descriptors():
    assert len(build_corpus("n<=5")) == 1 + 1 + 2 + 6 + 21
    assert len(build_corpus("range:cycle:3..50")) == 48
    assert build_corpus("family:paperG_r:3")[0].params["r"] == 3
    assert all(s.params["kst"][0] >= s.params["kst"][1] for s in build_corpus("kst<=9"))
    with pytest.raises(ValueError):
        build_corpus("n<=9")
    with pytest.raises(ValueError):
        build_corpus("nosuch:3")


def test_ratio_summary():
    info = ratio_summary("n<=5")
    assert info["max_ratio"] >= 1
    g = parse_graph6(info["graph6"])
    s = solve_all(g)
    assert s.vp / s.vp_minus == info["max_ratio"]


def test_samples_from_graphs_and_descriptors():
    rep = run_check("fam-cycles", [Sample(cycle(7), {}, "c7"), cycle(8)])
    assert rep.tested == 2 and rep.corpus == "2 given graphs"
    assert get_check("fam-cycles").id == "fam-cycles"
    with pytest.raises(KeyError):
        get_check("nope")

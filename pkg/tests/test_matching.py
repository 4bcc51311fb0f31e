import itertools

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from vertexpos.matching import UNMATCHED, hopcroft_karp, konig_cover, maximum_antichain_csr


@st.composite
def bipartite(draw, max_side=8):
    nl = draw(st.integers(0, max_side))
    nr = draw(st.integers(0, max_side))
    adj = [sorted(draw(st.sets(st.integers(0, max(nr - 1, 0)), max_size=nr))) if nr else [] for _ in range(nl)]
    indptr, indices = [0], []
    for row in adj:
        indices += row
        indptr.append(len(indices))
    return nl, nr, indptr, indices


def _nx_size(nl, nr, indptr, indices):
    h = nx.Graph()
    h.add_nodes_from(("L", u) for u in range(nl))
    h.add_nodes_from(("R", v) for v in range(nr))
    for u in range(nl):
        h.add_edges_from((("L", u), ("R", v)) for v in indices[indptr[u]:indptr[u + 1]])
    return len(nx.max_weight_matching(h, maxcardinality=True))


@given(bipartite())
def test_matching_is_maximum_and_consistent(bg):
    nl, nr, indptr, indices = bg
    m = hopcroft_karp(nl, nr, indptr, indices)
    for u, v in m.pairs():
        assert v in indices[indptr[u]:indptr[u + 1]]
        assert m.match_right[v] == u
    assert sum(1 for u in m.match_right if u != UNMATCHED) == m.size
    assert m.size == _nx_size(*bg)


@given(bipartite())
def test_konig_cover(bg):
    nl, nr, indptr, indices = bg
    m = hopcroft_karp(nl, nr, indptr, indices)
    cl, cr = konig_cover(nl, nr, indptr, indices, m)
    for u in range(nl):
        for v in indices[indptr[u]:indptr[u + 1]]:
            assert cl[u] or cr[v]
    assert sum(cl) + sum(cr) == m.size


@st.composite
def posets(draw, max_k=8):
    k = draw(st.integers(0, max_k))
    rel = {(a, b) for a, b in itertools.combinations(range(k), 2) if draw(st.booleans())}
    # transitive closure keeps it a strict order (a < b only when a < b as ints)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return k, rel


@given(posets())
def test_antichain_width_by_brute_force(poset):
    k, rel = poset
    indptr, indices = [0], []
    for u in range(k):
        indices += sorted(v for a, v in rel if a == u)
        indptr.append(len(indices))
    anti, matching = maximum_antichain_csr(k, indptr, indices)
    assert not any((a, b) in rel for a in anti for b in anti)
    best = max(
        (len(s) for r in range(k + 1) for s in itertools.combinations(range(k), r)
         if not any((a, b) in rel for a in s for b in s)),
        default=0,
    )
    assert len(anti) == best == k - matching.size


def test_antichain_examples():
    # chain 0 < 1 < 2 < 3
    k = 4
    succ = [[1, 2, 3], [2, 3], [3], []]
    indptr = [0, 3, 5, 6, 6]
    anti, _ = maximum_antichain_csr(k, indptr, [v for s in succ for v in s])
    assert len(anti) == 1
    anti, _ = maximum_antichain_csr(5, [0] * 6, [])
    assert anti == [0, 1, 2, 3, 4]

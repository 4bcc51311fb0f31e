import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vertexpos.graph import Graph

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, b in zip(pairs, bits) if b]
    if connected:
        # a random spanning tree keeps every drawn graph connected
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.append((order[i], order[j]))
    return Graph(n, set((min(a, b), max(a, b)) for a, b in edges))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for k, name in mod.CRITERIA.items():
        clauses = mod.RESULTS[k]
        if not clauses:
            terminalreporter.write_line(f"criterion {k} ({name}): NOT RUN")
            continue
        bad = [c for c, (ok, _) in clauses.items() if not ok]
        status = "PASS" if not bad else "FAIL"
        terminalreporter.write_line(f"criterion {k} ({name}): {status} [{len(clauses) - len(bad)}/{len(clauses)} clauses]")
        for c in bad:
            terminalreporter.write_line(f"    failed {c}: {clauses[c][1]}")
        if len(clauses) == 1 and not bad:
            terminalreporter.write_line(f"    {next(iter(clauses.values()))[1]}")

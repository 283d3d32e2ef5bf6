import random

import networkx as nx
import pytest

from boxicity.graph import Graph


def from_nx(g) -> Graph:
    index = {v: i for i, v in enumerate(sorted(g.nodes))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in g.edges])


def to_nx(g: Graph):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def atlas(max_n: int) -> list[Graph]:
    """One graph per isomorphism class on 0..max_n vertices (max_n <= 7)."""
    return [from_nx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() <= max_n]


def random_graphs(count: int, n_lo: int, n_hi: int, seed: int, p: float = 0.5) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        out.append(Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return out


@pytest.fixture(scope="session")
def atlas6():
    return atlas(6)


_criteria: dict[int, str] = {}


def pytest_runtest_logreport(report):
    marker = "test_criterion_"
    if report.when != "call" or marker not in report.nodeid:
        return
    number = int(report.nodeid.split(marker)[1].split("_")[0])
    _criteria[number] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number:2d}: {_criteria[number]}")

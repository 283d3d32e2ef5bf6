import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxicity.families import complete, cycle, matching, octahedron, path, petersen, star
from boxicity.graph import Graph, complement, disjoint_union, identify_nonadjacent, induced_subgraph
from boxicity.interval import (
    IntervalModel,
    has_asteroidal_triple,
    intersection_graph_of_intervals,
    interval_model,
    is_chordal,
    is_co_interval,
    is_interval,
    is_union_co_interval,
    maximal_cliques,
    perfect_elimination_ordering,
)

from conftest import atlas, from_nx, random_graphs
from oracles import interval_by_ordering

SUBDIVIDED_CLAW = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def random_interval_graph(rng: random.Random, n: int) -> Graph:
    ivs = []
    for _ in range(n):
        a, b = sorted(rng.randint(0, 2 * n) for _ in range(2))
        ivs.append((a, b))
    return intersection_graph_of_intervals(IntervalModel(tuple(ivs)))


class TestChordal:
    def test_examples(self):
        assert not is_chordal(cycle(4))
        assert is_chordal(star(5)) and is_chordal(path(6))
        assert not is_chordal(octahedron())

    def test_peo_is_valid(self):
        for g in atlas(6):
            order = perfect_elimination_ordering(g)
            assert (order is not None) == nx.is_chordal(nx.Graph(list(g.edges)) if g.m else nx.empty_graph(g.n))
            if order is None:
                continue
            pos = {v: i for i, v in enumerate(order)}
            for v in order:
                later = [w for w in g.adj[v] if pos[w] > pos[v]]
                assert all(g.has_edge(a, b) for a, b in itertools.combinations(later, 2))


def _at_brute(g: Graph) -> bool:
    import networkx as nx

    ng = nx.Graph(list(g.edges))
    ng.add_nodes_from(range(g.n))

    def joined(a, b, avoid):
        blocked = {avoid} | set(g.adj[avoid])
        sub = ng.subgraph([x for x in range(g.n) if x not in blocked])
        return a in sub and b in sub and nx.has_path(sub, a, b)

    for a, b, c in itertools.combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(b, c) or g.has_edge(a, c):
            continue
        if joined(a, b, c) and joined(a, c, b) and joined(b, c, a):
            return True
    return False


class TestAsteroidalTriple:
    def test_examples(self):
        assert has_asteroidal_triple(SUBDIVIDED_CLAW)
        assert not has_asteroidal_triple(path(7))
        assert has_asteroidal_triple(cycle(6))

    def test_against_brute_force(self):
        for g in atlas(7):
            assert has_asteroidal_triple(g) == _at_brute(g)


class TestRecognition:
    def test_interval_examples(self):
        assert is_interval(path(4))
        assert not is_interval(cycle(4))
        assert not is_interval(petersen())

    def test_co_interval_examples(self):
        assert is_co_interval(complete(5))
        assert not is_co_interval(matching(2))
        assert is_co_interval(complete(2))

    def test_union_examples(self):
        for k in range(1, 6):
            assert is_union_co_interval(matching(k))
        # the complement of C4 is 2K2, which is interval, so this union qualifies
        assert is_union_co_interval(disjoint_union([cycle(4), complete(2)]))
        assert not is_union_co_interval(disjoint_union([cycle(5), complete(2)]))

    def test_against_ordering_oracle(self):
        for g in atlas(7):
            assert is_interval(g) == interval_by_ordering(g.n, g.edges), g

    def test_co_interval_is_interval_of_complement(self):
        for g in atlas(6):
            assert is_co_interval(g) == interval_by_ordering(g.n, complement(g).edges)


class TestClosure:
    def test_hereditary(self):
        for g in atlas(6):
            co, un = is_co_interval(g), is_union_co_interval(g)
            if not (co or un):
                continue
            for r in range(g.n + 1):
                for s in itertools.combinations(range(g.n), r):
                    sub = induced_subgraph(g, s)
                    if co:
                        assert is_co_interval(sub)
                    if un:
                        assert is_union_co_interval(sub)

    def test_identification_closure(self):
        for g in atlas(7):
            co, un = is_co_interval(g), is_union_co_interval(g)
            if not (co or un):
                continue
            comp_of = {v: i for i, c in enumerate(g.components()) for v in c}
            for u, v in itertools.combinations(range(g.n), 2):
                if g.has_edge(u, v):
                    continue
                h = identify_nonadjacent(g, u, v)
                if co:
                    assert is_co_interval(h)
                if un and comp_of[u] == comp_of[v]:
                    assert is_union_co_interval(h)


class TestIntervalModel:
    def test_examples(self):
        assert interval_model(complete(2)).intervals == ((1, 1), (1, 1))
        assert interval_model(path(3)).intervals == ((1, 1), (1, 2), (2, 2))
        assert interval_model(star(3)).intervals == ((1, 3), (1, 1), (2, 2), (3, 3))

    def test_intersection_examples(self):
        assert intersection_graph_of_intervals(IntervalModel(((1, 1), (2, 2), (3, 3)))) == Graph(3)
        assert intersection_graph_of_intervals(IntervalModel(((1, 4), (2, 3)))) == complete(2)

    def test_rejects_non_interval(self):
        with pytest.raises(ValueError):
            interval_model(cycle(4))

    def test_rejects_empty_interval(self):
        with pytest.raises(ValueError):
            IntervalModel(((2, 1),))

    def test_round_trip_random(self):
        rng = random.Random(2024)
        for _ in range(50):
            g = random_interval_graph(rng, rng.randint(1, 8))
            assert intersection_graph_of_intervals(interval_model(g)) == g

    def test_round_trip_atlas(self):
        for g in atlas(7):
            if is_interval(g):
                assert intersection_graph_of_intervals(interval_model(g)) == g

    def test_json(self):
        m = interval_model(path(4))
        assert IntervalModel.from_json(m.to_json()) == m
        assert m.to_json()["intervals"]["0"] == [1, 1]

    @settings(max_examples=50)
    @given(st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), max_size=9))
    def test_any_interval_family(self, raw):
        g = intersection_graph_of_intervals(IntervalModel(tuple(tuple(sorted(p)) for p in raw)))
        assert is_interval(g)


class TestMaximalCliques:
    def test_against_networkx(self):
        for g in random_graphs(40, 1, 10, seed=8):
            ng = nx.empty_graph(g.n)
            ng.add_edges_from(g.edges)
            ref = sorted(sorted(c) for c in nx.find_cliques(ng))
            assert [sorted(c) for c in maximal_cliques(g)] == ref

import itertools

import networkx as nx
import pytest

from boxicity.boxes import intersection_graph_of_boxes
from boxicity.covers import verify_cover
from boxicity.families import (
    AcyclicColoring,
    acyclic_chromatic_number,
    acyclic_coloring_to_boxes,
    check_acyclic_coloring,
    complete,
    cycle,
    line_of_complete,
    matching,
    octahedron,
    path,
    petersen,
    projective_incidence,
    star,
    star_clique_cover,
)
from boxicity.graph import Graph, complement, girth

from conftest import atlas, random_graphs, to_nx
from oracles import acyclic_chromatic_brute


class TestGenerators:
    def test_matching(self):
        g = matching(3)
        assert (g.n, g.m) == (6, 3)
        assert complement(g) == octahedron()

    def test_small_families(self):
        assert line_of_complete(4).n == 6
        assert nx.is_isomorphic(to_nx(line_of_complete(4)), to_nx(octahedron()))
        assert cycle(4) == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert star(3).degree(0) == 3
        assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())
        assert nx.is_isomorphic(to_nx(complement(line_of_complete(5))), nx.petersen_graph())

    @pytest.mark.parametrize("fn,arg", [(matching, 0), (complete, 0), (cycle, 2), (path, 0), (star, 0)])
    def test_rejects_bad_parameters(self, fn, arg):
        with pytest.raises(ValueError):
            fn(arg)


class TestStarCliques:
    @pytest.mark.parametrize("n", range(3, 8))
    def test_partition(self, n):
        c = star_clique_cover(n)
        assert verify_cover(c) == (n, 2)
        total = sum(len(b) for b in c.bags)
        assert total == c.host.m
        assert frozenset().union(*c.bags) == c.host.edges

    def test_degenerate(self):
        c = star_clique_cover(2)
        assert c.bags == () and c.host.n == 1

    def test_four(self):
        c = star_clique_cover(4)
        assert len(c.bags) == 4 and c.stats().s == 2


class TestProjective:
    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_regular_girth_six(self, q):
        g = projective_incidence(q)
        assert g.n == 2 * (q * q + q + 1)
        assert {g.degree(v) for v in range(g.n)} == {q + 1}
        assert girth(g) == 6
        assert nx.girth(to_nx(g)) == 6

    def test_heawood(self):
        assert nx.is_isomorphic(to_nx(projective_incidence(2)), nx.heawood_graph())

    @pytest.mark.parametrize("q", [1, 4, 6])
    def test_rejects_non_prime(self, q):
        with pytest.raises(ValueError):
            projective_incidence(q)


class TestAcyclicColoring:
    def test_examples(self):
        assert acyclic_chromatic_number(Graph(4))[0] == 1
        assert acyclic_chromatic_number(cycle(4))[0] == 3
        assert acyclic_chromatic_number(star(4))[0] == 2
        assert acyclic_chromatic_number(path(6))[0] == 2

    def test_against_brute_force(self):
        for g in atlas(6):
            k, col = acyclic_chromatic_number(g)
            check_acyclic_coloring(g, col)
            assert k == acyclic_chromatic_brute(g.n, g.edges)

    def test_checker_rejects(self):
        with pytest.raises(ValueError, match="monochromatic"):
            check_acyclic_coloring(path(2), AcyclicColoring(2, (0, 0)))
        with pytest.raises(ValueError, match="cycle"):
            check_acyclic_coloring(cycle(4), AcyclicColoring(2, (0, 1, 0, 1)))
        with pytest.raises(ValueError):
            check_acyclic_coloring(path(2), AcyclicColoring(2, (0,)))
        with pytest.raises(ValueError):
            check_acyclic_coloring(path(2), AcyclicColoring(2, (0, 2)))

    def test_size_limit(self):
        with pytest.raises(ValueError):
            acyclic_chromatic_number(Graph(11))

    def test_json(self):
        col = AcyclicColoring(3, (0, 1, 2, 1))
        assert AcyclicColoring.from_json(col.to_json()) == col


class TestColoringToBoxes:
    def test_c4(self):
        k, col = acyclic_chromatic_number(cycle(4))
        b = acyclic_coloring_to_boxes(cycle(4), col)
        assert b.d == 6 and b.locality() <= 4
        assert intersection_graph_of_boxes(b) == cycle(4)

    def test_tree(self):
        col = AcyclicColoring(2, (0, 1, 1, 1))
        b = acyclic_coloring_to_boxes(star(3), col)
        assert b.d == 2 and b.locality() <= 2
        assert intersection_graph_of_boxes(b) == star(3)

    def test_octahedron(self):
        k, col = acyclic_chromatic_number(octahedron())
        b = acyclic_coloring_to_boxes(octahedron(), col)
        assert b.locality() <= 2 * (k - 1)
        assert intersection_graph_of_boxes(b) == octahedron()

    def test_invalid_coloring(self):
        with pytest.raises(ValueError):
            acyclic_coloring_to_boxes(cycle(4), AcyclicColoring(2, (0, 1, 0, 1)))

    def test_random(self):
        for g in random_graphs(25, 3, 8, seed=53):
            k, col = acyclic_chromatic_number(g)
            b = acyclic_coloring_to_boxes(g, col)
            assert intersection_graph_of_boxes(b) == g
            assert b.locality() <= 2 * (max(k, 2) - 1)

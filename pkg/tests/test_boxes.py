import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxicity.boxes import (
    FULL,
    BoxRepresentation,
    boxes_to_cover,
    intersection_graph_of_boxes,
    local_cover_to_boxes,
    product_of_representations,
    union_cover_to_boxes,
)
from boxicity.covers import PLAIN, UNION, CoCover, verify_cover
from boxicity.families import complete, cycle, line_of_complete, matching, octahedron, path, star_clique_cover
from boxicity.graph import Graph, complement
from boxicity.interval import is_union_co_interval
from boxicity.solvers import boxicity, local_boxicity, union_boxicity

from conftest import atlas, random_graphs

PAIRED_OCTAHEDRON_BOXES = BoxRepresentation.build(3, [
    [(1, 1), FULL, FULL], [(2, 2), FULL, FULL],
    [FULL, (1, 1), FULL], [FULL, (2, 2), FULL],
    [FULL, FULL, (1, 1)], [FULL, FULL, (2, 2)],
])

C4_FACTORS = [
    BoxRepresentation.build(1, [[(1, 1)], [(1, 2)], [(2, 2)], [(1, 2)]]),
    BoxRepresentation.build(1, [[(1, 2)], [(1, 1)], [(1, 2)], [(2, 2)]]),
]

# six vertices, three bags; vertices 2 and 3 lie in two bags each
MIXED_HOST = path(6)
MIXED_COVER = CoCover.build(MIXED_HOST, [[(0, 1), (1, 2)], [(2, 3)], [(3, 4), (4, 5)]])


class TestIntersection:
    def test_all_full_is_complete(self):
        b = BoxRepresentation.build(2, [[FULL, FULL]] * 4)
        assert intersection_graph_of_boxes(b) == complete(4)

    def test_paired_unit_boxes_give_octahedron(self):
        assert intersection_graph_of_boxes(PAIRED_OCTAHEDRON_BOXES) == octahedron()
        assert PAIRED_OCTAHEDRON_BOXES.locality() == 1

    def test_disjoint_in_one_coordinate(self):
        b = BoxRepresentation.build(2, [[(1, 2), (1, 5)], [(3, 4), (1, 5)]])
        assert intersection_graph_of_boxes(b) == Graph(2)

    def test_validation(self):
        with pytest.raises(ValueError):
            BoxRepresentation.build(2, [[(1, 2)]])
        with pytest.raises(ValueError):
            BoxRepresentation.build(1, [[(3, 2)]])
        with pytest.raises(ValueError):
            BoxRepresentation.build(1, [["everything"]])

    def test_json(self):
        data = PAIRED_OCTAHEDRON_BOXES.to_json()
        assert data["boxes"]["0"] == [[1, 1], "full", "full"]
        assert BoxRepresentation.from_json(data) == PAIRED_OCTAHEDRON_BOXES


class TestUnionCover:
    def test_octahedron(self):
        b = union_cover_to_boxes(union_boxicity(octahedron()).cover)
        assert b.d == 3 and b.locality() == 1
        assert intersection_graph_of_boxes(b) == octahedron()

    def test_c4(self):
        b = union_cover_to_boxes(union_boxicity(cycle(4)).cover)
        assert b.d == 2 and b.locality() == 1
        assert intersection_graph_of_boxes(b) == cycle(4)

    def test_single_component(self):
        b = union_cover_to_boxes(CoCover.build(complete(2), [[(0, 1)]], UNION))
        assert b.d == 1
        assert intersection_graph_of_boxes(b) == Graph(2)

    def test_rejects_plain_or_many_bags(self):
        with pytest.raises(ValueError):
            union_cover_to_boxes(CoCover.build(complete(2), [[(0, 1)]], PLAIN))
        with pytest.raises(ValueError):
            union_cover_to_boxes(CoCover.build(matching(2), [[(0, 1)], [(2, 3)]], UNION))

    def test_one_local_iff_union_class(self):
        for g in atlas(6):
            host = complement(g)
            if is_union_co_interval(host):
                b = union_cover_to_boxes(CoCover(host, (host.edges,) if host.m else (), UNION))
                assert b.locality() <= 1 and intersection_graph_of_boxes(b) == g
            else:
                assert local_boxicity(g).value >= 2


class TestLocalCover:
    def test_octahedron(self):
        sol = local_boxicity(octahedron())
        b = local_cover_to_boxes(sol.cover, octahedron())
        assert b.locality() == 1
        assert intersection_graph_of_boxes(b) == octahedron()

    def test_star_cliques(self):
        c = star_clique_cover(5)
        h = complement(line_of_complete(5))
        b = local_cover_to_boxes(c, h)
        assert b.d == 5 and b.locality() == 2
        assert intersection_graph_of_boxes(b) == h

    def test_mixed_locality(self):
        h = complement(MIXED_HOST)
        b = local_cover_to_boxes(MIXED_COVER, h)
        assert b.d == 3
        assert [b.vertex_locality(v) for v in range(6)] == [1, 1, 2, 2, 1, 1]
        assert intersection_graph_of_boxes(b) == h

    def test_host_mismatch(self):
        with pytest.raises(ValueError):
            local_cover_to_boxes(MIXED_COVER, MIXED_HOST)

    def test_round_trip_a(self):
        for g in atlas(6) + random_graphs(30, 6, 8, seed=31):
            for sol in (local_boxicity(g), boxicity(g)):
                b = local_cover_to_boxes(sol.cover, g)
                assert intersection_graph_of_boxes(b) == g
                load = sol.cover.vertex_load()
                assert [b.vertex_locality(v) for v in range(g.n)] == load
                assert b.locality() == sol.cover.stats().s


class TestProjection:
    def test_all_full(self):
        b = BoxRepresentation.build(2, [[FULL, FULL]] * 3)
        assert boxes_to_cover(b).bags == ()

    def test_paired_unit_boxes_project_to_matching(self):
        c = boxes_to_cover(PAIRED_OCTAHEDRON_BOXES)
        assert c.host == matching(3)
        assert sorted(sorted(bag) for bag in c.bags) == [[(0, 1)], [(2, 3)], [(4, 5)]]

    def test_union_round_trip(self):
        c = union_boxicity(octahedron()).cover
        back = boxes_to_cover(union_cover_to_boxes(c))
        assert frozenset().union(*back.bags) == frozenset().union(*c.bags)

    @settings(max_examples=80)
    @given(st.integers(1, 7), st.integers(1, 4), st.data())
    def test_round_trip_b(self, n, d, data):
        extent = st.one_of(st.just(FULL), st.tuples(st.integers(0, 6), st.integers(0, 6)).map(lambda p: tuple(sorted(p))))
        boxes = [[data.draw(extent) for _ in range(d)] for _ in range(n)]
        b = BoxRepresentation.build(d, boxes)
        c = boxes_to_cover(b)
        assert c.host == complement(intersection_graph_of_boxes(b))
        assert verify_cover(c).s <= b.locality()


class TestProduct:
    def test_all_full(self):
        b = BoxRepresentation.build(1, [[FULL]] * 3)
        p = product_of_representations([b, b, b])
        assert p.d == 3 and intersection_graph_of_boxes(p) == complete(3)

    def test_c4(self):
        p = product_of_representations(C4_FACTORS)
        assert p.d == 2 and intersection_graph_of_boxes(p) == cycle(4)

    def test_intersection_of_factors(self):
        for g in random_graphs(20, 3, 7, seed=41):
            cover = union_boxicity(g).cover
            factors = [union_cover_to_boxes(CoCover(Graph(g.n, bag), (bag,), UNION)) for bag in cover.bags]
            if not factors:
                continue
            p = product_of_representations(factors)
            assert all(f.locality() <= 1 for f in factors)
            assert intersection_graph_of_boxes(p) == g

    def test_errors(self):
        with pytest.raises(ValueError):
            product_of_representations([])
        with pytest.raises(ValueError):
            product_of_representations([C4_FACTORS[0], BoxRepresentation.build(1, [[FULL]])])

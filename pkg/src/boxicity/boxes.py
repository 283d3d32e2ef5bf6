"""Box intersection representations and their translation to and from covers.

An extent is either a closed integer interval ``(l, r)`` or the marker
:data:`FULL` for the whole real line.  A box is ``k``-local when at most
``k`` of its extents are bounded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from .covers import PLAIN, UNION, CoCover, verify_cover
from .graph import Graph, complement
from .interval import intervals_meet, interval_model

FULL = "full"
Extent = Union[str, tuple[int, int]]


def is_full(x: Extent) -> bool:
    return isinstance(x, str)


def extents_meet(a: Extent, b: Extent) -> bool:
    return is_full(a) or is_full(b) or intervals_meet(a, b)


@dataclass(frozen=True)
class BoxRepresentation:
    """``boxes[v]`` lists the ``d`` extents of the box of vertex ``v``."""

    d: int
    boxes: tuple[tuple[Extent, ...], ...]

    def __post_init__(self):
        for v, box in enumerate(self.boxes):
            if len(box) != self.d:
                raise ValueError(f"vertex {v} has {len(box)} extents, expected {self.d}")
            for x in box:
                if is_full(x):
                    if x != FULL:
                        raise ValueError(f"unknown extent marker {x!r} at vertex {v}")
                elif len(x) != 2 or x[0] > x[1]:
                    raise ValueError(f"bad extent {x!r} at vertex {v}")

    @classmethod
    def build(cls, d: int, boxes: Sequence[Sequence]) -> "BoxRepresentation":
        return cls(d, tuple(tuple(x if is_full(x) else (int(x[0]), int(x[1])) for x in box) for box in boxes))

    @property
    def n(self) -> int:
        return len(self.boxes)

    def vertex_locality(self, v: int) -> int:
        return sum(1 for x in self.boxes[v] if not is_full(x))

    def locality(self) -> int:
        return max((self.vertex_locality(v) for v in range(self.n)), default=0)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "boxes": {
                str(v): [FULL if is_full(x) else list(x) for x in box]
                for v, box in enumerate(self.boxes)
            },
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "BoxRepresentation":
        if isinstance(data, str):
            data = json.loads(data)
        raw = data["boxes"]
        return cls.build(int(data["d"]), [raw[str(v)] for v in range(len(raw))])


def intersection_graph_of_boxes(b: BoxRepresentation) -> Graph:
    edges = [
        (u, v)
        for u in range(b.n)
        for v in range(u + 1, b.n)
        if all(extents_meet(x, y) for x, y in zip(b.boxes[u], b.boxes[v]))
    ]
    return Graph.from_edges(b.n, edges)


def _coordinate(n: int, edges) -> list[Extent]:
    """Interval model of the complement of the graph spanned by ``edges``, full line elsewhere."""
    support = sorted({x for e in edges for x in e})
    index = {v: i for i, v in enumerate(support)}
    spanned = Graph.from_edges(len(support), [(index[u], index[v]) for u, v in edges])
    model = interval_model(complement(spanned))
    column: list[Extent] = [FULL] * n
    for v, i in index.items():
        column[v] = model.intervals[i]
    return column


def _from_columns(n: int, columns: list[list[Extent]]) -> BoxRepresentation:
    return BoxRepresentation(len(columns), tuple(tuple(col[v] for col in columns) for v in range(n)))


def union_cover_to_boxes(c: CoCover) -> BoxRepresentation:
    """1-local boxes from a single-bag union-class cover, one coordinate per edge component.

    The result represents the complement of ``c.host``.
    """
    if c.class_flag != UNION:
        raise ValueError("expected a union-class cover")
    if len(c.bags) > 1:
        raise ValueError(f"expected at most one bag, got {len(c.bags)}")
    verify_cover(c)
    bag = c.bags[0] if c.bags else frozenset()
    spanned = Graph(c.host.n, bag)
    columns = []
    for comp in spanned.components():
        if len(comp) < 2:
            continue
        members = set(comp)
        columns.append(_coordinate(c.host.n, [e for e in bag if e[0] in members]))
    return _from_columns(c.host.n, columns)


def local_cover_to_boxes(c: CoCover, host_original: Graph) -> BoxRepresentation:
    """Boxes for ``host_original`` from a co-interval cover of its complement.

    Coordinate ``i`` carries an interval model of the complement of bag
    ``i``; vertices outside the bag get the full line there.  A vertex in
    ``m`` bags therefore has exactly ``m`` bounded extents.
    """
    if c.class_flag != PLAIN:
        raise ValueError("expected a plain co-interval cover")
    if complement(host_original) != c.host:
        raise ValueError("cover host is not the complement of the given graph")
    verify_cover(c)
    return _from_columns(host_original.n, [_coordinate(c.host.n, bag) for bag in c.bags])


def boxes_to_cover(b: BoxRepresentation) -> CoCover:
    """Project to each coordinate; its bag holds the pairs with bounded, disjoint extents."""
    host = complement(intersection_graph_of_boxes(b))
    bags = []
    for i in range(b.d):
        bag = frozenset(
            (u, v)
            for u in range(b.n)
            for v in range(u + 1, b.n)
            if not is_full(b.boxes[u][i])
            and not is_full(b.boxes[v][i])
            and not intervals_meet(b.boxes[u][i], b.boxes[v][i])
        )
        if bag:
            bags.append(bag)
    return CoCover(host, tuple(bags), PLAIN)


def product_of_representations(bs: Sequence[BoxRepresentation]) -> BoxRepresentation:
    """Cartesian product: extents concatenated factor by factor."""
    if not bs:
        raise ValueError("need at least one representation")
    n = bs[0].n
    for b in bs:
        if b.n != n:
            raise ValueError(f"vertex counts differ: {b.n} != {n}")
    return BoxRepresentation(
        sum(b.d for b in bs),
        tuple(tuple(x for b in bs for x in b.boxes[v]) for v in range(n)),
    )

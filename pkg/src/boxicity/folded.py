"""Folded covers: a single class member mapped onto the host by vertex splitting.

A folded cover is a split graph together with a fold map sending each split
vertex to the host vertex it was split from.  The fold map must be an
edge-surjective homomorphism whose fibers are independent sets.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .covers import PLAIN, CoCover, class_check, verify_cover
from .graph import Graph, _norm, identify_nonadjacent, parse_graph6, serialize_graph6
from .interval import is_co_interval, is_union_co_interval

MAX_ORACLE_VERTICES = 12


class FoldedCoverError(ValueError):
    pass


@dataclass(frozen=True)
class FoldedCover:
    split_graph: Graph
    fold_map: tuple[int, ...]

    def fibers(self, n: int) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(n)]
        for x, v in enumerate(self.fold_map):
            out[v].append(x)
        return out

    def to_json(self) -> dict:
        return {"split_graph6": serialize_graph6(self.split_graph), "fold_map": list(self.fold_map)}

    @classmethod
    def from_json(cls, data: dict | str) -> "FoldedCover":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(parse_graph6(data["split_graph6"]), tuple(data["fold_map"]))


def verify_folded_cover(host: Graph, f: FoldedCover, class_flag: str = PLAIN) -> int:
    """Check a folded cover of ``host`` and return its locality (largest fiber).

    Host vertices without incident edges may have empty fibers; edge
    surjectivity already forces a preimage for every other vertex.
    """
    g, phi = f.split_graph, f.fold_map
    if len(phi) != g.n:
        raise FoldedCoverError(f"fold map has {len(phi)} entries for {g.n} split vertices")
    for x, v in enumerate(phi):
        if not 0 <= v < host.n:
            raise FoldedCoverError(f"split vertex {x} maps to {v}, outside the host")
    for a, b in g.sorted_edges():
        if phi[a] == phi[b]:
            raise FoldedCoverError(f"fiber of host vertex {phi[a]} is not independent: edge {(a, b)}")
        if not host.has_edge(phi[a], phi[b]):
            raise FoldedCoverError(f"split edge {(a, b)} maps to non-edge {_norm(phi[a], phi[b])}")
    image = {_norm(phi[a], phi[b]) for a, b in g.edges}
    missing = sorted(host.edges - image)
    if missing:
        raise FoldedCoverError(f"uncovered host edge {missing[0]}")
    member = is_co_interval if class_flag == PLAIN else is_union_co_interval
    if not member(g):
        raise FoldedCoverError(f"split graph is not in class {class_flag}")
    return max((len(fib) for fib in f.fibers(host.n)), default=0)


def local_cover_to_folded(c: CoCover) -> FoldedCover:
    """Disjoint union of the bags' spanned subgraphs, each copy folded onto its original vertex."""
    verify_cover(c)
    edges = []
    fold: list[int] = []
    for bag in c.bags:
        support = sorted({x for e in bag for x in e})
        offset = len(fold)
        local = {v: offset + i for i, v in enumerate(support)}
        fold.extend(support)
        edges.extend((local[u], local[v]) for u, v in bag)
    return FoldedCover(Graph.from_edges(len(fold), edges), tuple(fold))


def fold(f: FoldedCover, n: int) -> Graph:
    """Identify every fiber of ``f`` into a single vertex, one non-adjacent pair at a time.

    Returns a graph on the host's vertex ids ``0..n-1``; host vertices with
    empty fibers stay isolated.
    """
    g = f.split_graph
    labels = list(f.fold_map)
    while True:
        pair = next(
            ((a, b) for a, b in itertools.combinations(range(g.n), 2) if labels[a] == labels[b]),
            None,
        )
        if pair is None:
            break
        a, b = pair
        g = identify_nonadjacent(g, a, b)
        del labels[b]
    return Graph.from_edges(n, [(labels[a], labels[b]) for a, b in g.edges])


def _search_split(host: Graph, sizes: tuple[int, ...], class_flag: str) -> FoldedCover | None:
    copies = []
    start = 0
    for k in sizes:
        copies.append(list(range(start, start + k)))
        start += k
    total = start
    fold_map = tuple(v for v, k in enumerate(sizes) for _ in range(k))
    test = class_check(class_flag)
    host_edges = sorted(host.edges, key=lambda e: (e[1], e[0]))
    # host vertex whose incident edges are all decided after each host edge
    finished_at: dict[int, int] = {}
    for i, (u, v) in enumerate(host_edges):
        finished_at[v] = i
    checkpoints = {i: v for v, i in finished_at.items()}
    patterns = []
    for u, v in host_edges:
        pairs = [(a, b) for a in copies[u] for b in copies[v]]
        patterns.append(
            [c for r in range(1, len(pairs) + 1) for c in itertools.combinations(pairs, r)]
        )
    chosen: list[tuple] = []
    memo: dict[frozenset, bool] = {}

    def ok(edges: frozenset) -> bool:
        if len(edges) < 2:
            return True
        hit = memo.get(edges)
        if hit is None:
            hit = memo[edges] = test(edges)
        return hit

    def rec(i: int) -> bool:
        if i == len(host_edges):
            return ok(frozenset(e for pat in chosen for e in pat))
        for pat in patterns[i]:
            chosen.append(pat)
            alive = True
            if i in checkpoints:
                top = checkpoints[i]
                alive = ok(frozenset(e for p in chosen for e in p if fold_map[e[1]] <= top))
            if alive and rec(i + 1):
                return True
            chosen.pop()
        return False

    if not rec(0):
        return None
    edges = [e for pat in chosen for e in pat]
    return FoldedCover(Graph.from_edges(total, edges), fold_map)


def folded_search_bounded(
    host: Graph, max_s: int, max_total_vertices: int, class_flag: str = PLAIN
) -> tuple[int, FoldedCover] | None:
    """Smallest ``s <= max_s`` admitting a class-member split graph, by exhaustive search.

    Every host vertex is split into between 1 and ``s`` copies with at most
    ``max_total_vertices`` copies overall, and every host edge ``vw`` is
    replaced by any nonempty set of copy pairs.  Returns None when nothing
    within the bounds works.  A test oracle for tiny hosts only.
    """
    if max_total_vertices > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle limited to {MAX_ORACLE_VERTICES} split vertices")
    if host.n == 0:
        return 0, FoldedCover(Graph(0), ())
    for s in range(1, max_s + 1):
        for sizes in itertools.product(range(1, s + 1), repeat=host.n):
            if max(sizes) != s or sum(sizes) > max_total_vertices:
                continue
            found = _search_split(host, sizes, class_flag)
            if found is not None:
                return s, found
    return None

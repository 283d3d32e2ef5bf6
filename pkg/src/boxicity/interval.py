"""Interval and co-interval graph recognition, and explicit interval models.

Recognition uses the Lekkerkerker-Boland characterization: a graph is an
interval graph iff it is chordal and has no asteroidal triple.  The core
routines work on adjacency bitmasks so the cover solvers can call them in
tight loops; the public functions wrap them for :class:`Graph` inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Edge, Graph, complement, induced_subgraph


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mcs_order(n: int, adj: Sequence[int]) -> list[int]:
    weight = [0] * n
    unvisited = (1 << n) - 1
    order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in _bits(unvisited):
            if weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        unvisited &= ~(1 << best)
        for w in _bits(adj[best] & unvisited):
            weight[w] += 1
    return order


def _peo(n: int, adj: Sequence[int]) -> list[int] | None:
    """Perfect elimination ordering, or None when the graph is not chordal."""
    order = _mcs_order(n, adj)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    visited = 0
    for v in order:
        earlier = adj[v] & visited
        if earlier:
            p = max(_bits(earlier), key=pos.__getitem__)
            rest = earlier & ~(1 << p)
            if rest & ~adj[p]:
                return None
        visited |= 1 << v
    return order[::-1]


def _has_at(n: int, adj: Sequence[int]) -> bool:
    full = (1 << n) - 1
    comp = []
    for a in range(n):
        label = [-1] * n
        remaining = full & ~(adj[a] | (1 << a))
        cid = 0
        while remaining:
            seed = remaining & -remaining
            reach = seed
            frontier = seed
            while frontier:
                nxt = 0
                for x in _bits(frontier):
                    nxt |= adj[x]
                nxt &= remaining & ~reach
                reach |= nxt
                frontier = nxt
            for x in _bits(reach):
                label[x] = cid
            remaining &= ~reach
            cid += 1
        comp.append(label)
    for a in range(n):
        non_a = full & ~(adj[a] | (1 << a))
        for b in _bits(non_a >> (a + 1) << (a + 1)):
            non_ab = non_a & ~(adj[b] | (1 << b))
            for c in _bits(non_ab >> (b + 1) << (b + 1)):
                if (
                    comp[a][b] == comp[a][c]
                    and comp[b][a] == comp[b][c]
                    and comp[c][a] == comp[c][b]
                ):
                    return True
    return False


def _interval_masks(n: int, adj: Sequence[int]) -> bool:
    return _peo(n, adj) is not None and not _has_at(n, adj)


def _compact(edges: Iterable[Edge]) -> tuple[int, list[int]]:
    """Relabel the endpoints of ``edges`` to ``0..k-1``; return ``k`` and bitmask adjacency."""
    index: dict[int, int] = {}
    pairs = []
    for u, v in edges:
        pairs.append((index.setdefault(u, len(index)), index.setdefault(v, len(index))))
    adj = [0] * len(index)
    for a, b in pairs:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return len(index), adj


def _complement_masks(n: int, adj: Sequence[int]) -> list[int]:
    full = (1 << n) - 1
    return [full & ~adj[v] & ~(1 << v) for v in range(n)]


def edges_co_interval(edges: Iterable[Edge]) -> bool:
    """Is the graph spanned by ``edges`` (endpoints only) a co-interval graph?"""
    n, adj = _compact(edges)
    return _interval_masks(n, _complement_masks(n, adj))


def edges_union_co_interval(edges: Iterable[Edge]) -> bool:
    """Is every component of the graph spanned by ``edges`` co-interval?"""
    n, adj = _compact(edges)
    seen = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        reach = frontier = 1 << s
        while frontier:
            nxt = 0
            for x in _bits(frontier):
                nxt |= adj[x]
            frontier = nxt & ~reach
            reach |= frontier
        seen |= reach
        verts = list(_bits(reach))
        if len(verts) < 4:
            # every graph on at most three vertices is co-interval
            continue
        index = {v: i for i, v in enumerate(verts)}
        sub = [0] * len(verts)
        for v in verts:
            for w in _bits(adj[v]):
                sub[index[v]] |= 1 << index[w]
        if not _interval_masks(len(verts), _complement_masks(len(verts), sub)):
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """A perfect elimination ordering of ``g`` if it is chordal, else None."""
    return _peo(g.n, g.masks())


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def has_asteroidal_triple(g: Graph) -> bool:
    return _has_at(g.n, g.masks())


def is_interval(g: Graph) -> bool:
    return _interval_masks(g.n, g.masks())


def is_co_interval(g: Graph) -> bool:
    return is_interval(complement(g))


def is_union_co_interval(g: Graph) -> bool:
    return all(
        len(comp) < 2 or is_co_interval(induced_subgraph(g, comp))
        for comp in g.components()
    )


@dataclass(frozen=True)
class IntervalModel:
    """Closed integer interval ``intervals[v] = (l, r)`` for every vertex ``v``."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for v, (l, r) in enumerate(self.intervals):
            if l > r:
                raise ValueError(f"empty interval [{l}, {r}] at vertex {v}")

    def __len__(self) -> int:
        return len(self.intervals)

    def to_json(self) -> dict:
        return {"intervals": {str(v): [l, r] for v, (l, r) in enumerate(self.intervals)}}

    @classmethod
    def from_json(cls, data: dict | str) -> "IntervalModel":
        if isinstance(data, str):
            data = json.loads(data)
        raw = data["intervals"]
        n = len(raw)
        return cls(tuple(tuple(raw[str(v)]) for v in range(n)))


def intervals_meet(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return max(a[0], b[0]) <= min(a[1], b[1])


def intersection_graph_of_intervals(m: IntervalModel) -> Graph:
    iv = m.intervals
    edges = [
        (u, v)
        for u in range(len(iv))
        for v in range(u + 1, len(iv))
        if intervals_meet(iv[u], iv[v])
    ]
    return Graph.from_edges(len(iv), edges)


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted by member tuple."""
    adj = g.masks()
    out: list[frozenset[int]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(_bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: bin(adj[u] & p).count("1"))
        for v in _bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return sorted(out, key=lambda c: sorted(c))


def _consecutive_order(cliques: list[frozenset[int]], n: int) -> list[int] | None:
    """Order clique indices so that the cliques containing each vertex are consecutive."""
    k = len(cliques)
    containing = [sum(1 for c in cliques if v in c) for v in range(n)]
    order: list[int] = []
    used = [False] * k
    # 0 = not seen yet, 1 = in the last placed clique, 2 = finished
    state = [0] * n
    remaining = containing[:]

    def place(depth: int) -> bool:
        if depth == k:
            return True
        last = cliques[order[-1]] if order else frozenset()
        for i in range(k):
            if used[i]:
                continue
            c = cliques[i]
            if any(state[v] == 2 for v in c):
                continue
            closing = [v for v in last if v not in c]
            if any(remaining[v] for v in closing):
                continue
            saved = state[:]
            for v in closing:
                state[v] = 2
            for v in c:
                state[v] = 1
                remaining[v] -= 1
            used[i] = True
            order.append(i)
            if place(depth + 1):
                return True
            order.pop()
            used[i] = False
            for v in c:
                remaining[v] += 1
            state[:] = saved
        return False

    return order if place(0) else None


def interval_model(g: Graph) -> IntervalModel:
    """Interval model with positions taken from a consecutive ordering of maximal cliques.

    Cliques with at least two vertices occupy positions ``1..k``; isolated
    vertices are given fresh singleton positions after them.
    """
    if not is_interval(g):
        raise ValueError("graph is not an interval graph")
    cliques = [c for c in maximal_cliques(g) if len(c) > 1]
    order = _consecutive_order(cliques, g.n)
    if order is None:
        raise AssertionError("no consecutive clique ordering for an interval graph")
    lo: list[int | None] = [None] * g.n
    hi: list[int | None] = [None] * g.n
    for pos, i in enumerate(order, start=1):
        for v in cliques[i]:
            if lo[v] is None:
                lo[v] = pos
            hi[v] = pos
    nxt = len(order) + 1
    for v in range(g.n):
        if lo[v] is None:
            lo[v] = hi[v] = nxt
            nxt += 1
    model = IntervalModel(tuple((lo[v], hi[v]) for v in range(g.n)))
    if intersection_graph_of_intervals(model) != g:
        raise AssertionError("extracted interval model does not realize the graph")
    return model

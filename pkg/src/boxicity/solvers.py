"""Exact boxicity, union boxicity and local boxicity by branch-and-bound cover search.

All three parameters are covering numbers of the complement ``H^c``:

* ``boxicity``        fewest co-interval bags covering ``E(H^c)``;
* ``union_boxicity``  fewest bags that are vertex-disjoint unions of co-interval graphs;
* ``local_boxicity``  smallest per-vertex bag count over co-interval covers.

The search assigns complement edges one at a time to a nonempty set of bags
(bags may overlap: co-interval graphs are not closed under edge deletion, so
partitions would be unsound).  A partial bag is pruned as soon as its edges
inside a *closed* vertex set, one where every host pair is already decided,
fail the class test; this is exact because both classes are hereditary.
"""

from __future__ import annotations

import itertools
import math
import time
from typing import Callable, NamedTuple

from .covers import PLAIN, UNION, CoCover, CoverStats, class_check, verify_cover
from .graph import Edge, Graph, complement
from .interval import edges_co_interval, edges_union_co_interval, maximal_cliques, is_co_interval

INF = math.inf


class BudgetExceeded(Exception):
    """The time budget ran out; ``lower <= value <= upper`` and ``cover`` attains ``upper``."""

    def __init__(self, parameter: str, lower: int, upper: int, cover: CoCover):
        super().__init__(f"{parameter}: time budget exceeded, {lower} <= value <= {upper}")
        self.parameter = parameter
        self.lower = lower
        self.upper = upper
        self.cover = cover


class Solution(NamedTuple):
    value: int
    cover: CoCover


class LocalSolution(NamedTuple):
    value: int
    cover: CoCover
    stats: CoverStats


class _Timeout(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _CoverSearch:
    """Shared state for the cover searches over one host graph and one class."""

    def __init__(self, host: Graph, class_flag: str, deadline: float | None = None):
        self.host = host
        self.class_flag = class_flag
        self.deadline = deadline
        self._test = class_check(class_flag)
        self._memo: dict[int, bool] = {}
        self.nodes = 0

        # vertices by descending degree; edges in vertex-incremental order over that ranking
        rank = sorted(range(host.n), key=lambda v: (-host.degree(v), v))
        pos = {v: i for i, v in enumerate(rank)}
        self.edges: list[Edge] = sorted(
            host.edges,
            key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])),
        )
        m = len(self.edges)
        self.m = m
        index = {e: i for i, e in enumerate(self.edges)}
        self.endpoints = [(1 << u) | (1 << v) for u, v in self.edges]

        # masks of decided edges inside the two maximal closed vertex sets after step i
        self.closed: list[tuple[int, ...]] = []
        for i, (u, v) in enumerate(self.edges):
            top = u if pos[u] > pos[v] else v
            pending = 0
            for w in host.adj[top]:
                j = index[(min(w, top), max(w, top))]
                if j > i:
                    pending |= 1 << w
            with_top = 0
            before_top = 0
            for j in range(i + 1):
                if not self.endpoints[j] & pending:
                    with_top |= 1 << j
                if not self.endpoints[j] & (1 << top):
                    before_top |= 1 << j
            masks = {with_top, before_top}
            if i == m - 1:
                masks.add((1 << m) - 1)
            self.closed.append(tuple(masks))

    def ok(self, mask: int) -> bool:
        if mask & (mask - 1) == 0:
            return True  # zero or one edge
        hit = self._memo.get(mask)
        if hit is None:
            hit = self._test([self.edges[j] for j in _bits(mask)])
            self._memo[mask] = hit
        return hit

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Timeout

    def _consistent(self, bags: list[int], i: int) -> bool:
        for closed in self.closed[i]:
            for b in bags:
                if not self.ok(b & closed):
                    return False
        return True

    def to_cover(self, bags: list[int]) -> CoCover:
        return CoCover(
            self.host,
            tuple(frozenset(self.edges[j] for j in _bits(b)) for b in bags),
            self.class_flag,
        )

    @staticmethod
    def _subsets(candidates: list[int], bags: list[int]):
        """Subsets of candidate bag indices, skipping relabelings of identical bags."""
        for size in range(len(candidates) + 1):
            for combo in itertools.combinations(candidates, size):
                chosen = set(combo)
                redundant = False
                for b in combo:
                    for a in candidates:
                        if a < b and a not in chosen and bags[a] == bags[b]:
                            redundant = True
                            break
                    if redundant:
                        break
                if not redundant:
                    yield combo

    def global_cover(self, d: int) -> list[int] | None:
        """Bags (edge-index masks) of a cover with at most ``d`` bags, or None."""
        if self.m == 0:
            return []
        if d <= 0:
            return None
        bags: list[int] = []

        def rec(i: int) -> bool:
            if i == self.m:
                return True
            self._tick()
            bit = 1 << i
            k = len(bags)
            options = []
            for combo in self._subsets(list(range(k)), bags):
                for new in range(0, d - k + 1):
                    if combo or new:
                        options.append((len(combo) + new, new, combo))
            options.sort(key=lambda o: (o[0], o[1]))
            for _, new, combo in options:
                for b in combo:
                    bags[b] |= bit
                bags.extend([bit] * new)
                if self._consistent(bags, i) and rec(i + 1):
                    return True
                del bags[k:]
                for b in combo:
                    bags[b] &= ~bit
            return False

        return list(bags) if rec(0) else None

    def local_cover(self, s: int) -> list[int] | None:
        """Bags of a cover in which every vertex lies in at most ``s`` bag supports, or None."""
        if self.m == 0:
            return []
        if s <= 0:
            return None
        bags: list[int] = []
        supports: list[int] = []
        load = [0] * self.host.n

        def rec(i: int) -> bool:
            if i == self.m:
                return True
            self._tick()
            bit = 1 << i
            ends = self.endpoints[i]
            u, v = self.edges[i]
            k = len(bags)

            # cheapest bags first: those already touching both endpoints, then one, then none
            candidates = sorted(range(k), key=lambda b: (bin(ends & ~supports[b]).count("1"), b))
            candidates = [
                b for b in candidates
                if load[u] + (0 if supports[b] >> u & 1 else 1) <= s
                and load[v] + (0 if supports[b] >> v & 1 else 1) <= s
            ]
            options = []
            for combo in self._subsets_bounded(candidates, bags, supports, u, v, s - load[u], s - load[v]):
                extra_u = sum(0 if supports[b] >> u & 1 else 1 for b in combo)
                extra_v = sum(0 if supports[b] >> v & 1 else 1 for b in combo)
                room = min(s - load[u] - extra_u, s - load[v] - extra_v)
                for new in range(0, room + 1):
                    if combo or new:
                        options.append((extra_u + extra_v + 2 * new, len(combo) + new, new, combo))
            options.sort(key=lambda o: o[:3])
            for *_, new, combo in options:
                old_supports = [supports[b] for b in combo]
                for b in combo:
                    bags[b] |= bit
                    if not supports[b] >> u & 1:
                        load[u] += 1
                    if not supports[b] >> v & 1:
                        load[v] += 1
                    supports[b] |= ends
                bags.extend([bit] * new)
                supports.extend([ends] * new)
                load[u] += new
                load[v] += new
                if self._consistent(bags, i) and rec(i + 1):
                    return True
                load[u] -= new
                load[v] -= new
                del bags[k:]
                del supports[k:]
                for b, old in zip(combo, old_supports):
                    bags[b] &= ~bit
                    if not old >> u & 1:
                        load[u] -= 1
                    if not old >> v & 1:
                        load[v] -= 1
                    supports[b] = old
            return False

        return list(bags) if rec(0) else None

    def _subsets_bounded(self, candidates, bags, supports, u, v, room_u, room_v):
        """Subsets of candidate bags whose extra load at ``u`` and ``v`` fits the budget."""
        out = []

        def grow(start: int, combo: list[int], ru: int, rv: int):
            out.append(tuple(combo))
            for idx in range(start, len(candidates)):
                b = candidates[idx]
                cu = 0 if supports[b] >> u & 1 else 1
                cv = 0 if supports[b] >> v & 1 else 1
                if cu > ru or cv > rv:
                    continue
                # identical bags are interchangeable: only take the first unused copy
                if any(
                    bags[a] == bags[b] and a < b and a not in combo
                    for a in candidates[:idx]
                ):
                    continue
                combo.append(b)
                grow(idx + 1, combo, ru - cu, rv - cv)
                combo.pop()

        grow(0, [], room_u, room_v)
        return out


def _greedy_clique_cover(host: Graph) -> list[frozenset[Edge]]:
    """Cover by maximal cliques, each step taking the clique with most uncovered edges."""
    cliques = [sorted(c) for c in maximal_cliques(host) if len(c) > 1]
    uncovered = set(host.edges)
    bags = []
    while uncovered:
        best = max(
            cliques,
            key=lambda c: sum(1 for e in itertools.combinations(c, 2) if e in uncovered),
        )
        bag = frozenset(itertools.combinations(best, 2))
        bags.append(bag)
        uncovered -= bag
    return bags


def _induced_matching_lower_bound(host: Graph) -> int:
    """Size of a greedily grown induced matching; each of its edges needs its own co-interval bag."""
    chosen: list[Edge] = []
    blocked: set[int] = set()
    for u, v in sorted(host.edges, key=lambda e: (host.degree(e[0]) + host.degree(e[1]), e)):
        if u in blocked or v in blocked:
            continue
        chosen.append((u, v))
        blocked |= {u, v} | host.adj[u] | host.adj[v]
    return len(chosen)


def _deadline(time_budget: float | None) -> float | None:
    return None if time_budget is None else time.monotonic() + time_budget


def _finish(cover: CoCover) -> CoverStats:
    # solvers never hand out unverified certificates
    return verify_cover(cover)


def find_global_cover(host: Graph, d: int, class_flag: str = PLAIN, time_budget: float | None = None) -> CoCover | None:
    """A cover of ``host`` with at most ``d`` bags of the given class, or None if none exists."""
    search = _CoverSearch(host, class_flag, _deadline(time_budget))
    try:
        bags = search.global_cover(d)
    except _Timeout:
        raise BudgetExceeded("cover", 0, host.m, CoCover(host, (), class_flag)) from None
    if bags is None:
        return None
    cover = search.to_cover(bags)
    _finish(cover)
    return cover


def find_local_cover(host: Graph, s: int, class_flag: str = PLAIN, time_budget: float | None = None) -> CoCover | None:
    """A cover of ``host`` with locality at most ``s``, or None if none exists."""
    search = _CoverSearch(host, class_flag, _deadline(time_budget))
    try:
        bags = search.local_cover(s)
    except _Timeout:
        raise BudgetExceeded("cover", 0, host.m, CoCover(host, (), class_flag)) from None
    if bags is None:
        return None
    cover = search.to_cover(bags)
    _finish(cover)
    return cover


def _global_value(h: Graph, class_flag: str, parameter: str, time_budget: float | None) -> Solution:
    host = complement(h)
    if host.m == 0:
        return Solution(0, CoCover(host, (), class_flag))
    whole_ok = (edges_co_interval if class_flag == PLAIN else edges_union_co_interval)(host.edges)
    if whole_ok:
        cover = CoCover(host, (host.edges,), class_flag)
        _finish(cover)
        return Solution(1, cover)
    lower = 2
    if class_flag == PLAIN:
        lower = max(lower, _induced_matching_lower_bound(host))
    fallback = CoCover(host, tuple(_greedy_clique_cover(host)), class_flag)
    upper = len(fallback.bags)
    search = _CoverSearch(host, class_flag, _deadline(time_budget))
    d = lower
    try:
        while d < upper:
            bags = search.global_cover(d)
            if bags is not None:
                cover = search.to_cover(bags)
                stats = _finish(cover)
                return Solution(stats.t, cover)
            d += 1
    except _Timeout:
        raise BudgetExceeded(parameter, d, upper, fallback) from None
    _finish(fallback)
    return Solution(upper, fallback)


def boxicity(h: Graph, time_budget: float | None = None) -> Solution:
    """Smallest number of co-interval graphs covering the complement of ``h``.

    Returns the value together with a verified witness cover of
    ``complement(h)``.  Complete graphs have boxicity 0 (empty cover).
    """
    return _global_value(h, PLAIN, "box", time_budget)


def union_boxicity(h: Graph, time_budget: float | None = None) -> Solution:
    """Smallest number of vertex-disjoint unions of co-interval graphs covering ``complement(h)``."""
    return _global_value(h, UNION, "unionbox", time_budget)


def _local_value(h: Graph, class_flag: str, parameter: str, time_budget: float | None) -> LocalSolution:
    host = complement(h)
    if host.m == 0:
        cover = CoCover(host, (), class_flag)
        return LocalSolution(0, cover, cover.stats())
    # locality 1 means vertex-disjoint bags, i.e. the host itself is a union of co-interval graphs
    if edges_union_co_interval(host.edges):
        if class_flag == UNION:
            bags = (host.edges,)
        else:
            bags = tuple(
                frozenset(e for e in host.edges if e[0] in comp)
                for comp in host.components()
                if len(comp) > 1
            )
        cover = CoCover(host, bags, class_flag)
        stats = _finish(cover)
        return LocalSolution(1, cover, stats)
    fallback = CoCover(host, tuple(_greedy_clique_cover(host)), class_flag)
    upper = _finish(fallback).s
    search = _CoverSearch(host, class_flag, _deadline(time_budget))
    s = 2
    try:
        while s < upper:
            bags = search.local_cover(s)
            if bags is not None:
                cover = search.to_cover(bags)
                stats = _finish(cover)
                return LocalSolution(stats.s, cover, stats)
            s += 1
    except _Timeout:
        raise BudgetExceeded(parameter, s, upper, fallback) from None
    return LocalSolution(upper, fallback, fallback.stats())


def local_boxicity(h: Graph, time_budget: float | None = None) -> LocalSolution:
    """Smallest locality of a co-interval cover of ``complement(h)``, with witness and stats."""
    return _local_value(h, PLAIN, "localbox", time_budget)


def local_boxicity_union_class(h: Graph, time_budget: float | None = None) -> Solution:
    """As :func:`local_boxicity`, but bags only need to be unions of co-interval graphs."""
    value, cover, _ = _local_value(h, UNION, "localbox", time_budget)
    return Solution(value, cover)


def box_f(h: Graph) -> float:
    """Folded boxicity: 1 when ``complement(h)`` is co-interval, infinite otherwise."""
    return 1 if is_co_interval(complement(h)) else INF

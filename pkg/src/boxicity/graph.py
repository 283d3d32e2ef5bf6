"""Simple undirected graphs on dense vertex ids ``0..n-1``.

A :class:`Graph` is immutable.  Every operation returns a new graph, so
graphs can be shared freely between solvers, certificates and threads.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1`` with edges stored as sorted pairs ``(u, v)``, ``u < v``."""

    n: int
    edges: frozenset[Edge] = frozenset()
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        edges = frozenset(_norm(u, v) for u, v in self.edges)
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or v >= self.n:
                raise ValueError(f"edge {(u, v)} out of range for n={self.n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        return cls(n, frozenset(_norm(*e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def masks(self) -> list[int]:
        """Adjacency as one integer bitmask per vertex."""
        out = []
        for nb in self.adj:
            mask = 0
            for w in nb:
                mask |= 1 << w
            out.append(mask)
        return out

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    # edge-list JSON: {"n": int, "edges": [[u, v], ...]}
    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_edges(int(data["n"]), data["edges"])


def complement(g: Graph) -> Graph:
    edges = frozenset(
        (u, v) for u, v in itertools.combinations(range(g.n), 2) if (u, v) not in g.edges
    )
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled ``0..|s|-1`` in increasing id order."""
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph.from_edges(len(verts), edges)


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def identify_nonadjacent(g: Graph, u: int, v: int) -> Graph:
    """Merge non-adjacent ``u`` and ``v``.

    The larger id is deleted and merged into the smaller one; ids above the
    deleted vertex shift down by one.
    """
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertices {u}, {v} out of range for n={g.n}")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent")
    keep, drop = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        if x == drop:
            x = keep
        return x - 1 if x > drop else x

    edges = {_norm(relabel(a), relabel(b)) for a, b in g.edges}
    return Graph.from_edges(g.n - 1, edges)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of ``g`` (lexicographic edge order), adjacent iff the edges meet."""
    es = g.sorted_edges()
    out = [
        (i, j)
        for (i, e), (j, f) in itertools.combinations(enumerate(es), 2)
        if set(e) & set(f)
    ]
    return Graph.from_edges(len(es), out)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def has_induced_two_matching(g: Graph) -> bool:
    """True iff two edges of ``g`` have no edge between their four endpoints."""
    es = g.sorted_edges()
    for (a, b), (c, d) in itertools.combinations(es, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not (g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, c) or g.has_edge(b, d)):
            return True
    return False


class Graph6Error(ValueError):
    pass


def serialize_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error(f"only n <= 62 is supported, got n={g.n}")
    bits = [
        1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    if not text:
        raise Graph6Error("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} out of the graph6 range")
    n = ord(text[0]) - 63
    if n > 62:
        raise Graph6Error("multi-byte size field (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = text[1:]
    if len(body) != nchars:
        raise Graph6Error(f"expected {nchars} data characters for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    edges = [p for p, b in zip(pairs, bits) if b]
    return Graph.from_edges(n, edges)

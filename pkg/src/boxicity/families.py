"""Graph families used by the separation results, plus acyclic colorings and their boxes."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .boxes import FULL, BoxRepresentation, local_cover_to_boxes, product_of_representations
from .covers import PLAIN, CoCover
from .graph import Graph, complement, induced_subgraph, line_graph
from .solvers import find_global_cover

MAX_ACYCLIC_N = 10


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def matching(k: int) -> Graph:
    """``k`` disjoint edges ``(2i, 2i+1)``."""
    _need(k >= 1, f"matching needs k >= 1, got {k}")
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    _need(k >= 1, f"star needs k >= 1, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def octahedron() -> Graph:
    return complement(matching(3))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def line_of_complete(n: int) -> Graph:
    """Line graph of ``K_n``; vertex ``i`` is the ``i``-th edge of ``K_n`` in lexicographic order."""
    return line_graph(complete(n))


def star_clique_cover(n: int) -> CoCover:
    """Cover of ``L(K_n)`` by the ``n`` cliques of edges sharing an endpoint of ``K_n``."""
    _need(n >= 2, f"star clique cover needs n >= 2, got {n}")
    lk = line_of_complete(n)
    kn_edges = complete(n).sorted_edges()
    bags = []
    for i in range(n):
        at_i = [j for j, e in enumerate(kn_edges) if i in e]
        bag = frozenset(itertools.combinations(at_i, 2))
        if bag:
            bags.append(bag)
    return CoCover(lk, tuple(bags), PLAIN)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def _normalize(vec: tuple[int, ...], q: int) -> tuple[int, ...]:
    lead = next(x for x in vec if x)
    inv = pow(lead, -1, q)
    return tuple(x * inv % q for x in vec)


def projective_incidence(q: int) -> Graph:
    """Point-line incidence graph of the projective plane over the integers mod prime ``q``.

    Points are vertices ``0..N-1`` and lines ``N..2N-1`` with
    ``N = q^2 + q + 1``; both are listed as sorted normalized vectors
    (first nonzero coordinate 1), a line standing for its normal vector.
    """
    _need(_is_prime(q), f"q must be prime, got {q}")
    vecs = sorted(
        {_normalize(v, q) for v in itertools.product(range(q), repeat=3) if any(v)}
    )
    N = len(vecs)
    edges = [
        (i, N + j)
        for i, p in enumerate(vecs)
        for j, line in enumerate(vecs)
        if sum(a * b for a, b in zip(p, line)) % q == 0
    ]
    return Graph.from_edges(2 * N, edges)


@dataclass(frozen=True)
class AcyclicColoring:
    k: int
    colors: tuple[int, ...]

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict | str) -> "AcyclicColoring":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["k"]), tuple(data["colors"]))


def _is_forest(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def check_acyclic_coloring(g: Graph, col: AcyclicColoring) -> None:
    """Raise ValueError unless ``col`` is a proper coloring whose color pairs induce forests."""
    if len(col.colors) != g.n:
        raise ValueError(f"{len(col.colors)} colors for {g.n} vertices")
    for v, c in enumerate(col.colors):
        if not 0 <= c < col.k:
            raise ValueError(f"vertex {v} has color {c} outside [0, {col.k})")
    for u, v in g.edges:
        if col.colors[u] == col.colors[v]:
            raise ValueError(f"edge {(u, v)} is monochromatic")
    for i, j in itertools.combinations(range(col.k), 2):
        pair_edges = [e for e in g.edges if {col.colors[e[0]], col.colors[e[1]]} == {i, j}]
        if not _is_forest(g.n, pair_edges):
            raise ValueError(f"colors {i} and {j} induce a cycle")


def acyclic_chromatic_number(g: Graph) -> tuple[int, AcyclicColoring]:
    """Exact acyclic chromatic number by exhaustive coloring, with a witness.

    Vertices are colored in order and vertex ``v`` may only open the color
    right after the largest one used so far, which removes color
    permutations from the search.
    """
    if g.n > MAX_ACYCLIC_N:
        raise ValueError(f"exact acyclic coloring limited to n <= {MAX_ACYCLIC_N}, got {g.n}")
    if g.n == 0:
        return 0, AcyclicColoring(0, ())
    colors = [-1] * g.n

    def bicolored_cycle(v: int) -> bool:
        c = colors[v]
        for other in set(colors[w] for w in g.adj[v] if colors[w] >= 0):
            verts = [x for x in range(v + 1) if colors[x] in (c, other)]
            edges = [(a, b) for a, b in g.edges if a in verts and b in verts]
            index = {x: i for i, x in enumerate(verts)}
            if not _is_forest(len(verts), [(index[a], index[b]) for a, b in edges]):
                return True
        return False

    def extend(v: int, k: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(used + 1, k)):
            if any(colors[w] == c for w in g.adj[v]):
                continue
            colors[v] = c
            if not bicolored_cycle(v) and extend(v + 1, k, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    for k in range(1, g.n + 1):
        if extend(0, k, 0):
            col = AcyclicColoring(k, tuple(colors))
            check_acyclic_coloring(g, col)
            return k, col
    raise AssertionError("unreachable: n colors always suffice")


def acyclic_coloring_to_boxes(g: Graph, col: AcyclicColoring) -> BoxRepresentation:
    """Boxes of locality at most ``2(k-1)`` in ``k(k-1)`` dimensions from an acyclic ``k``-coloring.

    Each color pair induces a forest, which gets a 2-dimensional box
    representation from the exact two-bag cover search; vertices of other
    colors get the full plane there.  The product over all pairs represents
    ``g``.  A coloring with fewer than two colors is treated as a 2-coloring
    with an empty class, since a product over no pairs would be complete.
    """
    check_acyclic_coloring(g, col)
    k = max(col.k, 2)
    factors = []
    for i, j in itertools.combinations(range(k), 2):
        verts = [v for v in range(g.n) if col.colors[v] in (i, j)]
        forest = induced_subgraph(g, verts)
        cover = find_global_cover(complement(forest), 2, PLAIN)
        if cover is None:
            raise AssertionError(f"forest on colors {i},{j} has no 2-bag co-interval cover")
        rep = local_cover_to_boxes(cover, forest)
        pad = 2 - rep.d
        boxes: list[tuple] = [(FULL, FULL)] * g.n
        for idx, v in enumerate(verts):
            boxes[v] = rep.boxes[idx] + (FULL,) * pad
        factors.append(BoxRepresentation(2, tuple(boxes)))
    return product_of_representations(factors)

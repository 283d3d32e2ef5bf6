"""Co-interval subgraphs of a girth-6 graph are forests.

The incidence graph of the projective plane over the integers mod 3 is
4-regular with girth 6.  Random edge subsets are tested: every co-interval
one turns out to be a forest.
"""

import random

from boxicity.families import projective_incidence
from boxicity.graph import Graph, girth
from boxicity.interval import is_co_interval

g = projective_incidence(3)
print("vertices:", g.n, "degrees:", {g.degree(v) for v in range(g.n)}, "girth:", girth(g))

rng = random.Random(7)
edges = g.sorted_edges()
counts = {"forest": 0, "co-interval forest": 0, "co-interval with cycle": 0}
for _ in range(2000):
    h = Graph.from_edges(g.n, rng.sample(edges, rng.randint(2, 20)))
    forest = h.m == h.n - len(h.components())
    counts["forest"] += forest
    if is_co_interval(h):
        counts["co-interval forest" if forest else "co-interval with cycle"] += 1
print(counts)

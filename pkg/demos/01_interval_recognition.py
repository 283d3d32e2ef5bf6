"""Recognizing interval graphs and extracting interval models.

An interval graph is chordal and has no asteroidal triple.  When both hold,
a consecutive ordering of the maximal cliques gives integer intervals.
"""

from boxicity.families import cycle, path, star
from boxicity.graph import Graph
from boxicity.interval import (
    has_asteroidal_triple,
    intersection_graph_of_intervals,
    interval_model,
    is_chordal,
    is_co_interval,
    is_interval,
)

# the claw with every edge subdivided is chordal but has an asteroidal triple
claw = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])

for name, g in [("P4", path(4)), ("C4", cycle(4)), ("K1,3", star(3)), ("subdivided claw", claw)]:
    print(f"{name:16s} chordal={is_chordal(g)!s:5s} AT={has_asteroidal_triple(g)!s:5s} "
          f"interval={is_interval(g)!s:5s} co-interval={is_co_interval(g)}")

model = interval_model(star(3))
print("\nintervals for K1,3:", dict(enumerate(model.intervals)))
assert intersection_graph_of_intervals(model) == star(3)

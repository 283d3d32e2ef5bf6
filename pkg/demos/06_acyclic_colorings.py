"""Boxes from an acyclic coloring.

Every pair of color classes induces a forest, which fits in two dimensions.
Multiplying the representations of all pairs gives boxes of locality at most
2(k-1) in k(k-1) dimensions.
"""

from boxicity.boxes import intersection_graph_of_boxes
from boxicity.families import acyclic_chromatic_number, acyclic_coloring_to_boxes, cycle, octahedron, petersen
from boxicity.solvers import local_boxicity

for name, g in [("C4", cycle(4)), ("octahedron", octahedron()), ("Petersen", petersen())]:
    k, col = acyclic_chromatic_number(g)
    rep = acyclic_coloring_to_boxes(g, col)
    assert intersection_graph_of_boxes(rep) == g
    print(f"{name:10s} chi_a={k} dims={rep.d:2d} locality={rep.locality()} "
          f"bound={2 * (k - 1)} local boxicity={local_boxicity(g).value}")

"""From covers to boxes and back.

Coordinate i of a vertex's box is bounded only when the vertex lies in bag
i, so a cover of locality s yields s-local boxes.  Projecting boxes onto each
coordinate recovers a cover.
"""

from boxicity.boxes import boxes_to_cover, intersection_graph_of_boxes, local_cover_to_boxes, union_cover_to_boxes
from boxicity.covers import CoCover, verify_cover
from boxicity.families import octahedron, path
from boxicity.graph import complement
from boxicity.solvers import union_boxicity

oct_ = octahedron()
rep = union_cover_to_boxes(union_boxicity(oct_).cover)
print(f"octahedron: {rep.d} dimensions, locality {rep.locality()}")
for v, box in enumerate(rep.boxes):
    print("  ", v, box)
assert intersection_graph_of_boxes(rep) == oct_

# a cover where two vertices sit in two bags each
host = path(6)
cover = CoCover.build(host, [[(0, 1), (1, 2)], [(2, 3)], [(3, 4), (4, 5)]])
rep = local_cover_to_boxes(cover, complement(host))
print("\nper-vertex locality:", [rep.vertex_locality(v) for v in range(6)])
print("projected cover (t, s):", tuple(verify_cover(boxes_to_cover(rep))))

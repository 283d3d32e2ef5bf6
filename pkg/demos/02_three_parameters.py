"""Boxicity, union boxicity and local boxicity side by side.

Each value comes with a cover of the complement graph.  Matching complements
show how far apart the plain and union counts can drift.
"""

from boxicity.families import cycle, matching, octahedron
from boxicity.graph import complement
from boxicity.solvers import boxicity, local_boxicity, union_boxicity

cases = [("C4", cycle(4)), ("octahedron", octahedron())]
cases += [(f"complement of M{k}", complement(matching(k))) for k in range(1, 6)]

print(f"{'graph':20s} box  union  local")
for name, g in cases:
    b, u, l = boxicity(g), union_boxicity(g), local_boxicity(g)
    print(f"{name:20s} {b.value:3d}  {u.value:5d}  {l.value:5d}")

sol = boxicity(octahedron())
print("\nthree co-interval bags covering the octahedron's complement:")
for bag in sol.cover.bags:
    print("  ", sorted(bag))

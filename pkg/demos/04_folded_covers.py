"""Folded covers: split vertices of a single class member, then fold back.

A local cover becomes a folded one by taking the disjoint union of its bags;
the largest fiber equals the cover's locality.  For the plain class, no amount
of splitting helps a host that is not already co-interval.
"""

from boxicity.covers import UNION
from boxicity.families import cycle, matching, star_clique_cover
from boxicity.folded import fold, folded_search_bounded, local_cover_to_folded, verify_folded_cover

cover = star_clique_cover(5)
f = local_cover_to_folded(cover)
print("split graph:", f.split_graph.n, "vertices,", f.split_graph.m, "edges")
print("largest fiber:", verify_folded_cover(cover.host, f, UNION))
print("fold contains every host edge:", cover.host.edges <= fold(f, cover.host.n).edges)

print("\n2K2, plain class, up to 2 copies per vertex:", folded_search_bounded(matching(2), 2, 8))
s, g = folded_search_bounded(matching(2), 2, 8, UNION)
print("2K2, union class:", s)
s, g = folded_search_bounded(cycle(4), 2, 8)
print("C4, plain class:", s, "with split graph", g.split_graph)

"""Local covers of the line graph of K5.

The cliques of edges meeting at each vertex of K5 cover L(K5) with every
vertex in exactly two bags.  L(K5) itself is not co-interval, so locality 2
is optimal.
"""

from boxicity.covers import verify_cover
from boxicity.families import line_of_complete, star_clique_cover
from boxicity.graph import complement
from boxicity.interval import is_co_interval
from boxicity.solvers import local_boxicity

cover = star_clique_cover(5)
print("star clique cover (t, s):", tuple(verify_cover(cover)))
print("L(K5) co-interval?", is_co_interval(line_of_complete(5)))

sol = local_boxicity(complement(line_of_complete(5)))
print("local boxicity of the complement of L(K5):", sol.value)
print("solver's witness uses", sol.stats.t, "bags")

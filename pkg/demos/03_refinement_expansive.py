"""
Refinement expansivity and window covers
========================================

Intersecting iterates of cover elements over a time window yields finer and
finer covers.  A cover is refinement expansive when these windows end up
inside the minimal neighbourhoods.  The chain with the identity is
refinement expansive but not orbit expansive.
"""
from expanso.constructions import chain_space, discrete_example, indiscrete_example
from expanso.dynamics import (Cover, is_o_expansive_cover, is_r_expansive_cover,
                              r_expansive_oracle, uniform_refinement_N, window_cover)
from expanso.pointset import fmt

space, f = chain_space(5)
whole = Cover(space, (space.full,))
print("chain of 5 with {X}: r", is_r_expansive_cover(f, whole).certificate,
      "| o", bool(is_o_expansive_cover(f, whole)))

space, g = indiscrete_example(3, (1, 2, 0))
print("indiscrete rotation:", bool(is_r_expansive_cover(g, Cover(space, (space.full,)))))

space, rot = discrete_example(3, (1, 2, 0))
two = Cover.from_points(space, [[0, 1], [1, 2]])
for N in range(3):
    print("radius", N, [fmt(s) for s in window_cover(rot, two, N)])
singletons = Cover.from_points(space, [[0], [1], [2]])
print("uniform radius against singletons:", uniform_refinement_N(rot, two, singletons).radius)

# a failing cover stalls in a cycle of window families
space, ident = discrete_example(2)
d = is_r_expansive_cover(ident, Cover(space, (space.full,)))
print("identity on two points:", d.verdict, d.certificate)
print("oracle:", bool(r_expansive_oracle(ident, Cover(space, (space.full,)))))

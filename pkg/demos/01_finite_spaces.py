"""
Finite spaces as preorders
==========================

A topology on finitely many points is pinned down by the smallest open set
around each point.  Here we build a few spaces, look at their separation
properties and collapse indistinguishable points.
"""
from expanso.constructions import chain_space, enumerate_spaces
from expanso.pointset import fmt, mask
from expanso.topology import (closure, discrete, separation_axioms, space_from_open_family,
                              t0_quotient)

# the chain 0 < 1 < 2 with upper sets as opens
chain, _ = chain_space(3)
print("chain neighbourhoods:", [fmt(m) for m in chain.min_nbhd])
print("chain opens:", [fmt(w) for w in chain.opens])
print("closure of {2}:", fmt(closure(chain, mask([2]))))
print("chain axioms:", separation_axioms(chain))
print("discrete axioms:", separation_axioms(discrete(3)))

# the same space, given by its open sets
same = space_from_open_family(3, [0, mask([2]), mask([1, 2]), mask([0, 1, 2])])
print("built from opens equals chain:", same == chain)

# points 0 and 1 cannot be told apart; the T0 quotient merges them
twins = space_from_open_family(3, [0, mask([0, 1]), mask([0, 1, 2])])
q = t0_quotient(twins)
print("quotient projection:", q.projection, "neighbourhoods:",
      [fmt(m) for m in q.space.min_nbhd])

# labeled topology counts
for n in range(1, 5):
    print(n, "points:", sum(1 for _ in enumerate_spaces(n)), "topologies")

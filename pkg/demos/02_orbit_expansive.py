"""
Orbit expansive covers
======================

A cover is orbit expansive when every two points eventually sit in no common
element.  On a finite space that only happens for the discrete topology.
"""
from expanso.constructions import chain_space, discrete_example
from expanso.dynamics import (Cover, decide_orbit_expansive, is_o_expansive_cover,
                              min_o_expansive_cover, o_expansive_oracle)

space, rot = discrete_example(3, (1, 2, 0))
two = Cover.from_points(space, [[0, 1], [1, 2]])
print("rotation with {0,1},{1,2}:", is_o_expansive_cover(rot, two))
print("brute-force oracle agrees:", bool(o_expansive_oracle(rot, two)))
print("smallest expansive cover:", min_o_expansive_cover(rot, 3))

space, ident = discrete_example(2)
d = is_o_expansive_cover(ident, Cover(space, (space.full,)))
print("identity with {X}:", d.verdict, "witness", d.certificate)

chain, f = chain_space(4)
print("chain of 4:", decide_orbit_expansive(f))

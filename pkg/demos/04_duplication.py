"""
Doubling a closed invariant set
===============================

Adding a copy of a closed invariant set produces a non-Hausdorff system, and
the enlarged cover stays refinement expansive.
"""
from expanso.constructions import chain_space, closed_invariant_sets, duplicate, duplicated_cover
from expanso.dynamics import Cover, is_r_expansive_cover, r_expansive_oracle
from expanso.pointset import fmt, mask
from expanso.topology import separation_axioms

space, f = chain_space(3)
print("closed invariant sets:", [fmt(k) for k in closed_invariant_sets(f)])
dup = duplicate(space, f, mask([0]))
print("new neighbourhoods:", [fmt(m) for m in dup.space.min_nbhd])
z = duplicated_cover(dup, Cover(space, (space.full,)))
print("enlarged cover:", [fmt(u) for u in z])
print("still refinement expansive:", is_r_expansive_cover(dup.homeo, z).certificate,
      bool(r_expansive_oracle(dup.homeo, z)))
print("axioms of the doubled space:", separation_axioms(dup.space))

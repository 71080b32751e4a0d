"""
Shifts of finite type
=====================

Cylinder covers of a shift are decided on the graph of symbol pairs; periodic
points come from traces of matrix powers.
"""
from expanso.sft import (check_duplicated_shift_cover, full_shift, golden_mean, higher_block,
                         is_o_expansive_symbol_cover, periodic_count, recode_cover,
                         symbol_cover)

s2 = full_shift(2)
print("full 2-shift, cylinders:", bool(is_o_expansive_symbol_cover(s2, symbol_cover(s2, [[0], [1]]))))

s3 = full_shift(3)
d = is_o_expansive_symbol_cover(s3, symbol_cover(s3, [[0, 1], [1, 2]]))
print("full 3-shift, overlapping cover:", d.verdict, d.certificate)

g = golden_mean()
print("golden mean periodic counts:", [periodic_count(g, n) for n in range(1, 11)])
print("fixed points of the full 2-shift up to n=10 equal 2^n:",
      all(periodic_count(s2, n) == 2 ** n for n in range(1, 11)))

hb, words = higher_block(g, 2)
print("golden mean 2-blocks:", words)
c = symbol_cover(g, [[0], [1]])
print("same verdict after recoding:",
      bool(is_o_expansive_symbol_cover(hb, recode_cover(c, words))))

# doubling the fixed point 0^inf
print("doubled, A_n = {0}:", bool(check_duplicated_shift_cover(s2, 0, symbol_cover(s2, [[1], [0]]))))
d = check_duplicated_shift_cover(s2, 0, symbol_cover(s2, [[1], [0, 1]]))
print("doubled, A_n = {0,1}:", d.verdict, d.certificate)

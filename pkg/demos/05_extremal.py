"""Exhaustive searches for the smallest and largest centralizers."""

from fgc.extremal import W, construct, max_centralizer_fixed_cycles, min_centralizer, w_centralizer_size
from fgc.canonical import class_key

for mode in ("Cbij_over_bij", "C_over_bij", "C_over_all"):
    value, keys = min_centralizer(5, mode)
    print(f"n=5 {mode}: minimum {value} attained by {len(keys)} classes")

value, keys = max_centralizer_fixed_cycles(5, [2])
print("one 2-cycle on 5 points: maximum", value, "=", w_centralizer_size(2, 3))
print("unique maximiser is W(2,3):", keys == {class_key(construct(W(2, 3)))})

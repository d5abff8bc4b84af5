"""Predict the cycle type of a commuting permutation from how it moves the cycles of f."""

from fgc.centralizer import predicted_cycle_type, tree_forest_shape
from fgc.funcgraph import Endofunction, commutes, cycle_type, from_cycles

f = from_cycles(4, [(0, 1), (2, 3)])
g = from_cycles(4, [(0, 2, 1, 3)])
print("commute:", commutes(f, g))
print("predicted", predicted_cycle_type(f, g), "actual", cycle_type(g))

f = from_cycles(6, [(0, 1, 2, 3), (4, 5)])
g = Endofunction((4, 5, 4, 5, 4, 5))
print("edges from the 4-cycle onto the 2-cycle:", tree_forest_shape(f, g, 0, 1))

"""Recount one anchored term by summing over antichain sequences."""

from fgc.decompose import components
from fgc.homcount import hom_anchored, theorem34_terms
from fgc.named import named

f = named("ex7")
(p,) = components(f)
print("DP count, anchor 0 -> 2:", hom_anchored(p, p, f, 2))
total = 0
for _, seq, contribution in theorem34_terms(p, p, f, k=2):
    if contribution:
        total += contribution
        print("  ", [sorted(a) for a in seq], "->", contribution)
print("antichain sum:", total)

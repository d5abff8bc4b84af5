"""Count functions and permutations commuting with a 4-cycle that carries trees."""

from fgc.centralizer import centralizer_report
from fgc.decompose import components
from fgc.homcount import hom_anchored
from fgc.named import named

f = named("ex7")
(p,) = components(f)
print("anchored counts:", [hom_anchored(p, p, f, k) for k in range(4)])
rep = centralizer_report(f)
print("|C(f)| =", rep.total)
print("|C_bij(f)| =", rep.bijective_total)

g = named("ex5")
for c in centralizer_report(g).class_summary:
    print(f"class {c.key}: n_T={c.n_T} s_T={c.s_T} tree automorphisms {c.automorphisms}")
print("|C_bij| for the index-2 example =", centralizer_report(g).bijective_total)

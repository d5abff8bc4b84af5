"""Split the squaring map mod 9 into components, cycles and trees."""

from fgc.canonical import aut_count, tree_code
from fgc.decompose import components
from fgc.named import powmod

f = powmod(2, 9)
print("f =", list(f.images))
for i, pc in enumerate(components(f)):
    print(f"component {i}: cycle {pc.cycle}, vertices {pc.vertices}")
    for t in pc.trees:
        print(f"  tree at {t.root}: {t.vertices} code {tree_code(t)} automorphisms {aut_count(t)}")

"""Stream commuting functions in lexicographic order and check them against brute force."""

from fgc.centralizer import enumerate_centralizer
from fgc.named import named
from fgc.oracle import brute_centralizer

f = named("ex4")
stream = list(enumerate_centralizer(f))
print(len(stream), "commuting functions; first three:")
for g in stream[:3]:
    print("  ", list(g.images))
print("same list as brute force:", stream == brute_centralizer(f))

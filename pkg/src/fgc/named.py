"""Small worked graphs used throughout the docs, demos and tests."""

from .extremal import W, Z, construct, union
from .funcgraph import Endofunction

__all__ = ["NAMED", "named", "powmod"]


def powmod(a: int, n: int) -> Endofunction:
    """``x -> x**a mod n`` on ``range(n)``."""
    return Endofunction(tuple(pow(x, a, n) for x in range(n)))


NAMED: dict[str, Endofunction] = {
    # squaring mod 9: components {0,3,6}, {1,8}, {2,4,5,7}
    "ex1": powmod(2, 9),
    # a 4-cycle next to a 2-cycle
    "ex4": Endofunction((1, 2, 3, 0, 5, 4)),
    # 4-cycle with two-leaf trees at opposite vertices: index 2
    "ex5": Endofunction((1, 2, 3, 0, 0, 0, 2, 2)),
    # 4-cycle carrying a 2-chain, two 2-leaf stars and a bare vertex: 300 commuting maps
    "ex7": Endofunction((1, 2, 3, 0, 0, 4, 1, 1, 2, 2)),
    # a rooted tree on 6 vertices (root 0 made a fixed point) with 15 antichains
    "ex9": Endofunction((0, 0, 0, 1, 1, 2)),
    # cycle lengths 2, 2, 4 with three leaves on one 2-cycle
    "fig6": construct(union(W(2, 3), Z(2), Z(4))),
}


def named(name: str) -> Endofunction:
    try:
        return NAMED[name]
    except KeyError:
        raise KeyError(f"unknown named graph {name!r}; choose from {sorted(NAMED)}") from None

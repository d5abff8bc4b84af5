"""Endofunctions of {0, ..., n-1}, their functional graphs and composition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotBijective, OutOfRange, SizeMismatch

__all__ = [
    "Endofunction",
    "new_endofunction",
    "identity",
    "compose",
    "power",
    "commutes",
    "is_bijective",
    "is_endomorphism",
    "edges",
    "inverse",
    "conjugate",
    "cycle_type",
    "from_cycles",
]


@dataclass(frozen=True)
class Endofunction:
    """A total self-map of ``range(n)``, stored as its image vector.

    Instances are immutable and hashable, so they can key caches.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        for i, x in enumerate(images):
            if not 0 <= x < n:
                raise OutOfRange(f"image {x} of vertex {i} is outside [0, {n})")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __repr__(self) -> str:
        return f"Endofunction({list(self.images)})"

    @cached_property
    def preimages(self) -> tuple[tuple[int, ...], ...]:
        """``preimages[v]`` lists every ``u`` with ``f(u) = v``, ascending."""
        pre: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in enumerate(self.images):
            pre[v].append(u)
        return tuple(tuple(p) for p in pre)


def new_endofunction(images: Iterable[int]) -> Endofunction:
    return Endofunction(tuple(images))


def identity(n: int) -> Endofunction:
    return Endofunction(tuple(range(n)))


def _check_sizes(f: Endofunction, g: Endofunction) -> None:
    if f.n != g.n:
        raise SizeMismatch(f"domain sizes differ: {f.n} != {g.n}")


def compose(f: Endofunction, g: Endofunction) -> Endofunction:
    """Return ``f o g``, i.e. ``x -> f(g(x))``."""
    _check_sizes(f, g)
    fi = f.images
    return Endofunction(tuple(fi[y] for y in g.images))


def power(f: Endofunction, k: int) -> Endofunction:
    if k < 0:
        raise ValueError("negative powers are only defined for bijections; use inverse()")
    result = identity(f.n)
    base = f
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def commutes(f: Endofunction, g: Endofunction) -> bool:
    _check_sizes(f, g)
    fi, gi = f.images, g.images
    return all(fi[gi[x]] == gi[fi[x]] for x in range(f.n))


def is_bijective(f: Endofunction) -> bool:
    return len(set(f.images)) == f.n


def edges(f: Endofunction) -> list[tuple[int, int]]:
    """The edge list of the functional graph: one ``(v, f(v))`` per vertex."""
    return [(v, w) for v, w in enumerate(f.images)]


def is_endomorphism(f: Endofunction, g: Endofunction) -> bool:
    """True iff ``g`` sends every edge of the functional graph of ``f`` to an edge.

    Checked edge by edge on the edge list, without composing ``f`` and ``g``.
    """
    _check_sizes(f, g)
    edge_set = set(edges(f))
    gi = g.images
    return all((gi[v], gi[w]) in edge_set for v, w in edges(f))


def inverse(p: Endofunction) -> Endofunction:
    if not is_bijective(p):
        raise NotBijective("only bijections have inverses")
    inv = [0] * p.n
    for x, y in enumerate(p.images):
        inv[y] = x
    return Endofunction(tuple(inv))


def conjugate(f: Endofunction, p: Endofunction) -> Endofunction:
    """Relabel ``f`` by the permutation ``p``: returns ``p o f o p^-1``."""
    return compose(p, compose(f, inverse(p)))


def cycle_type(p: Endofunction) -> tuple[int, ...]:
    """Sorted cycle lengths of a permutation (ascending)."""
    if not is_bijective(p):
        raise NotBijective("cycle type is defined for permutations only")
    seen = [False] * p.n
    lengths = []
    for start in range(p.n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p.images[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Endofunction:
    """Build a permutation from disjoint cycles; unlisted points are fixed."""
    images = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return Endofunction(tuple(images))

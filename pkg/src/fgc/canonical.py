"""Canonical forms for rooted trees and pseudocycles.

Rooted trees get the classical AHU bracket code: a leaf is ``()`` and an
inner vertex wraps the sorted codes of its children.  A pseudocycle is keyed
by the lexicographically least rotation of its tree-code sequence, and a
whole functional graph by the sorted multiset of its component keys.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .decompose import Pseudocycle, RootedTree, components
from .funcgraph import Endofunction

__all__ = [
    "TreeCycleClass",
    "tree_code",
    "vertex_codes",
    "aut_count",
    "rotation_order",
    "min_rotation",
    "component_key",
    "classify_components",
    "class_key",
    "weakly_isomorphic",
]

LEAF = "()"


def vertex_codes(t: RootedTree) -> dict[int, str]:
    """Canonical code of the subtree hanging at every vertex of ``t``."""
    codes: dict[int, str] = {}
    for v in t.postorder():
        codes[v] = "(" + "".join(sorted(codes[c] for c in t.children[v])) + ")"
    return codes


@lru_cache(maxsize=65536)
def tree_code(t: RootedTree) -> str:
    return vertex_codes(t)[t.root]


@lru_cache(maxsize=65536)
def aut_count(t: RootedTree) -> int:
    """Order of the root-fixing automorphism group of ``t``.

    Children of a vertex with identical codes can be permuted freely, so the
    order is the product over vertices of the factorials of those multiplicities.
    """
    codes = vertex_codes(t)
    total = 1
    for v in t.vertices:
        for mult in Counter(codes[c] for c in t.children[v]).values():
            total *= factorial(mult)
    return total


def rotation_order(codes: Sequence) -> int:
    """Smallest period ``p | m`` with ``codes[i] == codes[(i + p) % m]`` for all i."""
    m = len(codes)
    if m == 0:
        raise ValueError("rotation order of an empty sequence is undefined")
    for p in range(1, m + 1):
        if m % p == 0 and all(codes[i] == codes[(i + p) % m] for i in range(m)):
            return p
    return m  # unreachable: p = m always matches


def min_rotation(codes: Sequence) -> tuple:
    """Lexicographically least rotation, by plain O(m^2) comparison."""
    seq = tuple(codes)
    return min((seq[i:] + seq[:i] for i in range(len(seq))), default=())


def _cycle_codes(pc: Pseudocycle) -> tuple[str, ...]:
    return tuple(tree_code(t) for t in pc.trees)


def component_key(pc: Pseudocycle) -> str:
    """Bracket string identifying the pseudocycle up to isomorphism.

    Each tree code is balanced, so concatenating them inside ``[...]`` is
    unambiguous.
    """
    return "[" + "".join(min_rotation(_cycle_codes(pc))) + "]"


@dataclass(frozen=True)
class TreeCycleClass:
    """Components whose tree-code sequences agree up to rotation."""

    codes: tuple[str, ...]
    members: tuple[int, ...]
    ord: int

    @property
    def m(self) -> int:
        return len(self.codes)

    @property
    def n_T(self) -> int:
        return len(self.members)

    @property
    def s_T(self) -> int:
        return self.m // self.ord

    @property
    def key(self) -> str:
        return "[" + "".join(self.codes) + "]"


def classify_components(f: Endofunction) -> list[TreeCycleClass]:
    """Group the components of ``f`` into cyclic-isomorphism classes.

    Classes are listed in order of their first member component.
    """
    groups: dict[tuple[str, ...], list[int]] = {}
    for i, pc in enumerate(components(f)):
        groups.setdefault(min_rotation(_cycle_codes(pc)), []).append(i)
    return [
        TreeCycleClass(codes=codes, members=tuple(members), ord=rotation_order(codes))
        for codes, members in groups.items()
    ]


def class_key(f: Endofunction) -> str:
    """Weak-isomorphism invariant of the whole graph: sorted component keys."""
    return "".join(sorted(component_key(pc) for pc in components(f)))


def weakly_isomorphic(f: Endofunction, g: Endofunction) -> bool:
    return f.n == g.n and class_key(f) == class_key(g)

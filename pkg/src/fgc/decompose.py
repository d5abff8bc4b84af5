"""Split a functional graph into pseudocycles: one directed cycle per
weakly connected component, with a rooted in-tree hanging at each cycle vertex.

Trees are oriented child -> parent, the same direction as ``f``.  Every
ordering produced here is deterministic: cycles start at their smallest
vertex, components are sorted by smallest vertex, children ascend by id.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .errors import NotACycleVertex, PreconditionError
from .funcgraph import Endofunction

__all__ = [
    "RootedTree",
    "Pseudocycle",
    "components",
    "cycle_vertices",
    "tree_at",
    "height",
    "remove_root",
    "subtree",
    "component_index",
    "heights",
    "anchors",
]


@dataclass(frozen=True)
class RootedTree:
    """A finite in-tree: every non-root vertex points at its parent."""

    root: int
    parent_of: Mapping[int, int]
    vertices: tuple[int, ...]
    height_of: Mapping[int, int]
    children: Mapping[int, tuple[int, ...]]

    @classmethod
    def from_parents(cls, root: int, parent_of: Mapping[int, int]) -> "RootedTree":
        parent_of = dict(parent_of)
        if root in parent_of:
            raise PreconditionError("the root must not have a parent")
        kids: dict[int, list[int]] = {root: []}
        for v in parent_of:
            kids.setdefault(v, [])
        for v, p in parent_of.items():
            if p not in kids:
                raise PreconditionError(f"parent {p} of {v} is not a tree vertex")
            kids[p].append(v)
        children = {v: tuple(sorted(c)) for v, c in kids.items()}
        heights = {root: 0}
        stack = [root]
        while stack:
            v = stack.pop()
            for c in children[v]:
                heights[c] = heights[v] + 1
                stack.append(c)
        if len(heights) != len(children):
            raise PreconditionError("parent map does not form a tree rooted at root")
        return cls(
            root=root,
            parent_of=MappingProxyType(parent_of),
            vertices=tuple(sorted(children)),
            height_of=MappingProxyType(heights),
            children=MappingProxyType(children),
        )

    def __hash__(self):
        return hash((self.root, tuple(sorted(self.parent_of.items()))))

    def __len__(self) -> int:
        return len(self.vertices)

    def proper_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v != self.root)

    def postorder(self) -> list[int]:
        """Vertices with every child listed before its parent."""
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(self.children[v])
        order.reverse()
        return order

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff ``a`` lies on the path from ``b`` to the root (``a <= b``)."""
        v = b
        while True:
            if v == a:
                return True
            if v == self.root:
                return False
            v = self.parent_of[v]


@dataclass(frozen=True)
class Pseudocycle:
    """One weakly connected component of a finite functional graph."""

    cycle: tuple[int, ...]
    trees: tuple[RootedTree, ...]

    @property
    def size(self) -> int:
        return sum(len(t) for t in self.trees)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for t in self.trees for v in t.vertices))

    def __len__(self) -> int:
        return len(self.cycle)


def subtree(t: RootedTree, x: int) -> RootedTree:
    """The full subtree of ``t`` hanging at ``x`` (``x`` becomes the root)."""
    parents = {}
    stack = [x]
    while stack:
        v = stack.pop()
        for c in t.children[v]:
            parents[c] = v
            stack.append(c)
    return RootedTree.from_parents(x, parents)


def remove_root(t: RootedTree) -> list[RootedTree]:
    """The forest left after deleting the root, one tree per root child."""
    return [subtree(t, c) for c in t.children[t.root]]


@dataclass(frozen=True)
class _Decomposition:
    on_cycle: tuple[bool, ...]
    heights: tuple[int, ...]
    anchor: tuple[int, ...]
    comp_of: tuple[int, ...]
    pseudocycles: tuple[Pseudocycle, ...]


@lru_cache(maxsize=8192)
def _decompose(f: Endofunction) -> _Decomposition:
    n = f.n
    img = f.images
    # 0 = unseen, 1 = on the current walk, 2 = finished
    state = [0] * n
    on_cycle = [False] * n
    for start in range(n):
        if state[start]:
            continue
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = img[v]
        if state[v] == 1:
            i = path.index(v)
            for w in path[i:]:
                on_cycle[w] = True
        for w in path:
            state[w] = 2

    heights = [0] * n
    anchor = list(range(n))
    kids: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if not on_cycle[v]:
            kids[img[v]].append(v)

    cycles = []
    seen = [False] * n
    for z in range(n):
        if on_cycle[z] and not seen[z]:
            cyc = []
            w = z
            while not seen[w]:
                seen[w] = True
                cyc.append(w)
                w = img[w]
            cycles.append(tuple(cyc))

    comp_of = [0] * n
    pcs = []
    for ci, cyc in enumerate(cycles):
        trees = []
        for z in cyc:
            parents = {}
            stack = [z]
            while stack:
                v = stack.pop()
                comp_of[v] = ci
                anchor[v] = z
                for c in kids[v]:
                    parents[c] = v
                    heights[c] = heights[v] + 1
                    stack.append(c)
            trees.append(RootedTree.from_parents(z, parents))
        pcs.append(Pseudocycle(cycle=cyc, trees=tuple(trees)))
    order = sorted(range(len(pcs)), key=lambda i: pcs[i].vertices[0])
    rank = {old: new for new, old in enumerate(order)}
    pcs = [pcs[i] for i in order]
    comp_of = [rank[c] for c in comp_of]
    return _Decomposition(
        on_cycle=tuple(on_cycle),
        heights=tuple(heights),
        anchor=tuple(anchor),
        comp_of=tuple(comp_of),
        pseudocycles=tuple(pcs),
    )


def components(f: Endofunction) -> tuple[Pseudocycle, ...]:
    """All pseudocycles of ``f``, ordered by smallest vertex.

    A component's smallest vertex need not lie on its cycle, so the order
    uses the minimum over the whole component.
    """
    return _decompose(f).pseudocycles


def component_index(f: Endofunction) -> tuple[int, ...]:
    """``component_index(f)[v]`` is the position of v's component in ``components(f)``."""
    return _decompose(f).comp_of


def cycle_vertices(f: Endofunction) -> frozenset[int]:
    d = _decompose(f)
    return frozenset(v for v in range(f.n) if d.on_cycle[v])


def tree_at(f: Endofunction, z: int) -> RootedTree:
    d = _decompose(f)
    if not d.on_cycle[z]:
        raise NotACycleVertex(f"vertex {z} is not on a cycle")
    pc = d.pseudocycles[d.comp_of[z]]
    return pc.trees[pc.cycle.index(z)]


def height(f: Endofunction, v: int) -> int:
    """Distance from ``v`` to the nearest cycle vertex along iterates of f."""
    return _decompose(f).heights[v]


def heights(f: Endofunction) -> tuple[int, ...]:
    return _decompose(f).heights


def anchors(f: Endofunction) -> tuple[int, ...]:
    """The cycle vertex at the root of each vertex's tree."""
    return _decompose(f).anchor

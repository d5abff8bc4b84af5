"""Homomorphisms from a pseudocycle into a functional graph.

A homomorphism ``h`` from a component ``P`` of ``f`` into the graph of
``tgt_f`` satisfies ``tgt_f(h(v)) == h(f(v))`` for every vertex of ``P``.
Counting runs a dynamic program over the source trees:

    H(x, v) = prod over children c of x of  sum over u in tgt_f^-1(v) of H(c, u)

which is the number of maps of the subtree at ``x`` sending ``x`` to ``v``.
The slower antichain-sum formula (:func:`hom_via_theorem34`) computes the
same number by a different decomposition and is kept as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator, Mapping, Optional, Sequence

from .decompose import Pseudocycle, RootedTree, components, heights, subtree
from .errors import BoundExceeded, DivisibilityViolation, InvalidTriple, NotAHomomorphism
from .funcgraph import Endofunction

__all__ = [
    "Antichain",
    "HomTriple",
    "hom_tree_rooted",
    "hom_pseudocycle",
    "hom_anchored",
    "antichains",
    "antichain_count",
    "theorem34_terms",
    "hom_via_theorem34",
    "enumerate_homs",
    "hom_to_triple",
    "triple_to_hom",
]

# A set of pairwise incomparable non-root tree vertices.
Antichain = frozenset

MAX_THEOREM34_TERMS = 2_000_000


@lru_cache(maxsize=4096)
def _hom_table(src: RootedTree, tgt_f: Endofunction) -> dict[int, tuple[int, ...]]:
    """``table[x][v]`` = number of maps of the subtree at x with x -> v."""
    pre = tgt_f.preimages
    n = tgt_f.n
    table: dict[int, tuple[int, ...]] = {}
    for x in src.postorder():
        row = [1] * n
        for c in src.children[x]:
            hc = table[c]
            for v in range(n):
                if row[v]:
                    row[v] *= sum(hc[u] for u in pre[v])
        table[x] = tuple(row)
    return table


def hom_tree_rooted(src: RootedTree, tgt_f: Endofunction, tgt_root: int) -> int:
    """Number of homomorphisms of ``src`` into the graph of ``tgt_f`` with root -> tgt_root."""
    return _hom_table(src, tgt_f)[src.root][tgt_root]


def _check_target(tgt: Pseudocycle, tgt_f: Endofunction) -> None:
    z = tgt.cycle[0]
    if z >= tgt_f.n or tgt_f(tgt.cycle[-1]) != z:
        raise ValueError("target pseudocycle is not a component of tgt_f")


def hom_anchored(src: Pseudocycle, tgt: Pseudocycle, tgt_f: Endofunction, k: int) -> int:
    """Homomorphisms ``src -> tgt`` sending the first cycle vertex of src to ``tgt.cycle[k]``."""
    m, l = len(src.cycle), len(tgt.cycle)
    if m % l:
        raise DivisibilityViolation(f"target cycle length {l} does not divide {m}")
    if not 0 <= k < l:
        raise ValueError(f"rotation offset {k} outside [0, {l})")
    _check_target(tgt, tgt_f)
    return prod(
        hom_tree_rooted(t, tgt_f, tgt.cycle[(k + i) % l]) for i, t in enumerate(src.trees)
    )


def hom_pseudocycle(src: Pseudocycle, tgt: Pseudocycle, tgt_f: Endofunction) -> int:
    """``|Hom(src, tgt)|``; zero unless the target cycle length divides the source's."""
    m, l = len(src.cycle), len(tgt.cycle)
    if m % l:
        return 0
    return sum(hom_anchored(src, tgt, tgt_f, k) for k in range(l))


# -- antichains ---------------------------------------------------------------

def _antichains_below(t: RootedTree, v: int) -> list[frozenset]:
    # antichains of the subtree at v, v itself allowed
    inner = [frozenset()]
    for c in t.children[v]:
        inner = [a | b for a in inner for b in _antichains_below(t, c)]
    return [frozenset({v})] + inner


def antichains(t: RootedTree) -> list[Antichain]:
    """Every set of pairwise incomparable non-root vertices, the empty set included.

    Sorted by size, then by the sorted member tuple.
    """
    result = [frozenset()]
    for c in t.children[t.root]:
        result = [a | b for a in result for b in _antichains_below(t, c)]
    return sorted(result, key=lambda a: (len(a), sorted(a)))


def antichain_count(t: RootedTree) -> int:
    """``|Inc(t)|`` from the product recursion, without listing the sets."""
    below: dict[int, int] = {}
    for v in t.postorder():
        below[v] = 1 + prod(below[c] for c in t.children[v])
    return prod(below[c] for c in t.children[t.root])


# -- the antichain-sum formula --------------------------------------------------

def theorem34_terms(
    src: Pseudocycle,
    tgt: Pseudocycle,
    tgt_f: Endofunction,
    k: Optional[int] = None,
    max_terms: int = MAX_THEOREM34_TERMS,
) -> Iterator[tuple[int, tuple[Antichain, ...], int]]:
    """Yield ``(k, antichain sequence, contribution)`` for every summand.

    A vertex ``x`` at height ``h`` in the i-th source tree whose image sits at
    height 1 must land on a root of the root-truncated target tree at cycle
    position ``i + k - h + 1 (mod l)``; its subtree then maps freely below.
    Yields nothing when the target cycle length does not divide the source's.
    """
    m, l = len(src.cycle), len(tgt.cycle)
    if m % l:
        return
    _check_target(tgt, tgt_f)
    per_tree = [antichains(t) for t in src.trees]
    rotations = [k] if k is not None else list(range(l))
    total = len(rotations) * prod(len(a) for a in per_tree)
    if total > max_terms:
        raise BoundExceeded(f"{total} antichain sequences exceed the limit {max_terms}")

    truncated_roots = [t.children[t.root] for t in tgt.trees]
    weight_cache: dict[tuple[int, int, int], int] = {}

    def weight(i: int, x: int, pos: int) -> int:
        key = (i, x, pos)
        if key not in weight_cache:
            sub = subtree(src.trees[i], x)
            weight_cache[key] = sum(hom_tree_rooted(sub, tgt_f, r) for r in truncated_roots[pos])
        return weight_cache[key]

    for kk in rotations:
        for seq in product(*per_tree):
            contribution = 1
            for i, chain in enumerate(seq):
                hts = src.trees[i].height_of
                for x in chain:
                    contribution *= weight(i, x, (i + kk - hts[x] + 1) % l)
                    if not contribution:
                        break
                if not contribution:
                    break
            yield kk, seq, contribution


def hom_via_theorem34(
    src: Pseudocycle, tgt: Pseudocycle, tgt_f: Endofunction, k: Optional[int] = None
) -> int:
    """``|Hom(src, tgt)|`` (or the k-anchored part) as a sum over antichain sequences."""
    return sum(c for _, _, c in theorem34_terms(src, tgt, tgt_f, k))


# -- enumeration ----------------------------------------------------------------

def _tree_maps(t: RootedTree, tgt_f: Endofunction, root_img: int) -> list[dict[int, int]]:
    """All homomorphisms of ``t`` with the root sent to ``root_img``."""
    table = _hom_table(t, tgt_f)
    if not table[t.root][root_img]:
        return []
    pre = tgt_f.preimages
    order = []
    queue = [t.root]
    for v in queue:
        queue.extend(t.children[v])
        if v != t.root:
            order.append(v)
    assign = {t.root: root_img}
    if not order:
        return [dict(assign)]

    def candidates(i: int) -> list[int]:
        x = order[i]
        row = table[x]
        return [u for u in pre[assign[t.parent_of[x]]] if row[u]]

    out = []
    stack = [iter(candidates(0))]
    while stack:
        i = len(stack) - 1
        u = next(stack[-1], None)
        if u is None:
            stack.pop()
            continue
        assign[order[i]] = u
        if i + 1 == len(order):
            out.append(dict(assign))
        else:
            stack.append(iter(candidates(i + 1)))
    return out


def _target_cycles(tgt_f: Endofunction, tgt: Optional[Pseudocycle]) -> list[tuple[int, ...]]:
    if tgt is not None:
        _check_target(tgt, tgt_f)
        return [tgt.cycle]
    return [pc.cycle for pc in components(tgt_f)]


def _hom_vectors(
    src: Pseudocycle, tgt_f: Endofunction, tgt: Optional[Pseudocycle] = None
) -> list[tuple[int, ...]]:
    """Image vectors (over ``src.vertices``) of all homs, sorted ascending."""
    verts = src.vertices
    pos = {v: i for i, v in enumerate(verts)}
    m = len(src.cycle)
    vectors = []
    for cyc in _target_cycles(tgt_f, tgt):
        l = len(cyc)
        if m % l:
            continue
        for k in range(l):
            per_tree = []
            for i, t in enumerate(src.trees):
                maps = _tree_maps(t, tgt_f, cyc[(k + i) % l])
                if not maps:
                    break
                per_tree.append(maps)
            else:
                for combo in product(*per_tree):
                    vec = [0] * len(verts)
                    for part in combo:
                        for v, w in part.items():
                            vec[pos[v]] = w
                    vectors.append(tuple(vec))
    vectors.sort()
    return vectors


def enumerate_homs(
    src: Pseudocycle, tgt_f: Endofunction, tgt: Optional[Pseudocycle] = None
) -> Iterator[dict[int, int]]:
    """Yield every homomorphism of ``src`` into the graph of ``tgt_f`` exactly once.

    Maps are dicts keyed by the source vertices in ascending order, and come
    out in ascending lexicographic order of their image vectors.  Passing
    ``tgt`` restricts the images to that component.
    """
    verts = src.vertices
    for vec in _hom_vectors(src, tgt_f, tgt):
        yield dict(zip(verts, vec))


# -- the (anchor, antichains, subtree maps) bijection ---------------------------

@dataclass(frozen=True)
class HomTriple:
    """Anchor image, per-tree antichains, and the maps of the subtrees at antichain members."""

    anchor_image: int
    antichains: tuple[Antichain, ...]
    tree_homs: Mapping[int, Mapping[int, int]]


def _successor(src: Pseudocycle) -> dict[int, int]:
    succ = {}
    m = len(src.cycle)
    for i, t in enumerate(src.trees):
        succ.update(t.parent_of)
        succ[src.cycle[i]] = src.cycle[(i + 1) % m]
    return succ


def hom_to_triple(h: Mapping[int, int], src: Pseudocycle, tgt_f: Endofunction) -> HomTriple:
    succ = _successor(src)
    if set(h) != set(succ):
        raise NotAHomomorphism("map must be defined exactly on the source component")
    for v, w in succ.items():
        if tgt_f(h[v]) != h[w]:
            raise NotAHomomorphism(f"edge ({v}, {w}) is not preserved")
    hts = heights(tgt_f)
    chains = []
    tree_homs = {}
    for t in src.trees:
        members = frozenset(x for x in t.proper_vertices() if hts[h[x]] == 1)
        chains.append(members)
        for x in members:
            tree_homs[x] = {v: h[v] for v in subtree(t, x).vertices}
    return HomTriple(anchor_image=h[src.cycle[0]], antichains=tuple(chains), tree_homs=tree_homs)


def triple_to_hom(tau: HomTriple, src: Pseudocycle, tgt_f: Endofunction) -> dict[int, int]:
    """Rebuild the unique homomorphism described by ``tau``."""
    m = len(src.cycle)
    anchor = tau.anchor_image
    if not 0 <= anchor < tgt_f.n:
        raise InvalidTriple(f"anchor image {anchor} is not a target vertex")
    tgt_cycle = next((pc.cycle for pc in components(tgt_f) if anchor in pc.cycle), None)
    if tgt_cycle is None:
        raise InvalidTriple(f"anchor image {anchor} is not on a target cycle")
    l = len(tgt_cycle)
    if m % l:
        raise InvalidTriple(f"target cycle length {l} does not divide {m}")
    if len(tau.antichains) != m:
        raise InvalidTriple("need one antichain per source cycle position")
    members = set().union(*tau.antichains) if tau.antichains else set()
    if set(tau.tree_homs) != members:
        raise InvalidTriple("subtree maps must be given exactly for the antichain members")

    hts = heights(tgt_f)
    where = {v: i for i, v in enumerate(tgt_cycle)}
    start = where[anchor]
    h: dict[int, int] = {}
    for i, t in enumerate(src.trees):
        chain = tau.antichains[i]
        proper = set(t.proper_vertices())
        if not chain <= proper:
            raise InvalidTriple(f"antichain {sorted(chain)} is not inside tree {i}")
        for x in chain:
            for y in chain:
                if x != y and t.is_ancestor(x, y):
                    raise InvalidTriple(f"{x} and {y} are comparable")
        h[t.root] = tgt_cycle[(start + i) % l]
        queue = list(t.children[t.root])
        for v in queue:
            if v in chain:
                phi = tau.tree_homs[v]
                sub = subtree(t, v)
                if set(phi) != set(sub.vertices):
                    raise InvalidTriple(f"map for {v} must cover its subtree exactly")
                if not 0 <= phi[v] < tgt_f.n or hts[phi[v]] != 1:
                    raise InvalidTriple(f"image of {v} must have height 1")
                if tgt_f(phi[v]) != h[t.parent_of[v]]:
                    raise InvalidTriple(f"image of {v} does not hang below its parent's image")
                for c, p in sub.parent_of.items():
                    if not 0 <= phi[c] < tgt_f.n or tgt_f(phi[c]) != phi[p]:
                        raise InvalidTriple(f"map for {v} breaks edge ({c}, {p})")
                h.update(phi)
            else:
                h[v] = tgt_cycle[(where[h[t.parent_of[v]]] - 1) % l]
                queue.extend(t.children[v])
    return h

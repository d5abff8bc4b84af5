"""Counting and enumerating the functions that commute with a given ``f``.

A function commutes with ``f`` exactly when it is an endomorphism of the
functional graph of ``f``, and such an endomorphism is chosen independently on
every component.  So ``|C(f)|`` is the product over source components of the
number of homomorphisms from that component into the whole graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, gcd, prod
from typing import Iterator

from .canonical import aut_count, classify_components, tree_code, vertex_codes
from .decompose import Pseudocycle, RootedTree, component_index, components, tree_at
from .errors import NotBijective, NotCommuting, PreconditionError
from .funcgraph import Endofunction, commutes, cycle_type, is_bijective
from .homcount import _hom_vectors, hom_pseudocycle

__all__ = [
    "CentralizerReport",
    "hom_matrix",
    "count_centralizer",
    "count_bij_centralizer",
    "count_bij_centralizer_perm",
    "count_centralizer_perm",
    "centralizer_report",
    "enumerate_centralizer",
    "tree_isomorphisms",
    "induced_component_map",
    "predicted_cycle_type",
    "tree_forest_shape",
]


def hom_matrix(f: Endofunction) -> list[list[int]]:
    """``M[i][j] = |Hom(P_i, P_j)|`` over the components of ``f``."""
    comps = components(f)
    return [[hom_pseudocycle(p, q, f) for q in comps] for p in comps]


def count_centralizer(f: Endofunction) -> int:
    return prod(sum(row) for row in hom_matrix(f))


def count_bij_centralizer(f: Endofunction) -> int:
    """Class factors ``n_T! * s_T**n_T`` times the tree automorphism orders at every cycle vertex."""
    classes = prod(factorial(c.n_T) * c.s_T**c.n_T for c in classify_components(f))
    trees = prod(aut_count(t) for pc in components(f) for t in pc.trees)
    return classes * trees


def _cycle_counts(f: Endofunction) -> Counter:
    if not is_bijective(f):
        raise NotBijective("this formula applies to permutations only")
    return Counter(cycle_type(f))


def count_bij_centralizer_perm(f: Endofunction) -> int:
    """Permutations commuting with a permutation: ``prod_i n_i! * i**n_i``."""
    return prod(factorial(k) * i**k for i, k in _cycle_counts(f).items())


def count_centralizer_perm(f: Endofunction) -> int:
    """Functions commuting with a permutation: ``prod_i (sum_{d | i} n_d * d)**n_i``."""
    counts = _cycle_counts(f)
    return prod(
        sum(d * nd for d, nd in counts.items() if i % d == 0) ** ni for i, ni in counts.items()
    )


@dataclass(frozen=True)
class ClassFactor:
    key: str
    n_T: int
    s_T: int
    permutations: int  # n_T!
    rotations: int  # s_T ** n_T
    automorphisms: int  # product of tree automorphism orders over all members


@dataclass(frozen=True)
class CentralizerReport:
    total: int
    bijective_total: int
    per_component: tuple[tuple[int, ...], ...]
    class_summary: tuple[ClassFactor, ...]


def centralizer_report(f: Endofunction) -> CentralizerReport:
    comps = components(f)
    matrix = hom_matrix(f)
    summary = []
    for c in classify_components(f):
        auts = prod(aut_count(t) for i in c.members for t in comps[i].trees)
        summary.append(ClassFactor(c.key, c.n_T, c.s_T, factorial(c.n_T), c.s_T**c.n_T, auts))
    total = prod(sum(row) for row in matrix)
    bij = prod(s.permutations * s.rotations * s.automorphisms for s in summary)
    return CentralizerReport(
        total=total,
        bijective_total=bij,
        per_component=tuple(tuple(r) for r in matrix),
        class_summary=tuple(summary),
    )


# -- enumeration ----------------------------------------------------------------

def tree_isomorphisms(a: RootedTree, b: RootedTree) -> list[dict[int, int]]:
    """Every root-preserving isomorphism from ``a`` onto ``b``."""
    ca, cb = vertex_codes(a), vertex_codes(b)

    def match(x: int, y: int) -> list[dict[int, int]]:
        groups_x: dict[str, list[int]] = {}
        groups_y: dict[str, list[int]] = {}
        for c in a.children[x]:
            groups_x.setdefault(ca[c], []).append(c)
        for c in b.children[y]:
            groups_y.setdefault(cb[c], []).append(c)
        options = [[{x: y}]]
        for code, xs in groups_x.items():
            ys = groups_y[code]
            group_maps = []
            for perm in permutations(ys):
                for parts in product(*(match(cx, cy) for cx, cy in zip(xs, perm))):
                    merged = {}
                    for part in parts:
                        merged.update(part)
                    group_maps.append(merged)
            options.append(group_maps)
        out = []
        for parts in product(*options):
            merged = {}
            for part in parts:
                merged.update(part)
            out.append(merged)
        return out

    if ca[a.root] != cb[b.root]:
        return []
    return match(a.root, b.root)


def _iso_vectors(src: Pseudocycle, tgt: Pseudocycle) -> list[tuple[int, ...]]:
    """Image vectors of all isomorphisms ``src -> tgt``, sorted."""
    m = len(src.cycle)
    if len(tgt.cycle) != m:
        return []
    src_codes = [tree_code(t) for t in src.trees]
    tgt_codes = [tree_code(t) for t in tgt.trees]
    verts = src.vertices
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for k in range(m):
        if any(src_codes[i] != tgt_codes[(k + i) % m] for i in range(m)):
            continue
        per_tree = [tree_isomorphisms(t, tgt.trees[(k + i) % m]) for i, t in enumerate(src.trees)]
        for parts in product(*per_tree):
            vec = [0] * len(verts)
            for part in parts:
                for v, w in part.items():
                    vec[pos[v]] = w
            out.append(tuple(vec))
    out.sort()
    return out


def _lex_combine(
    f: Endofunction, comp_lists: list[list[tuple[int, ...]]], injective_components: bool
) -> Iterator[Endofunction]:
    """Merge independent per-component choices into full image vectors, in lex order.

    Each component's list is sorted by its own vertices in ascending order, so
    fixing the images of a component's first j vertices leaves a contiguous
    run of its list.  Walking the vertices 0..n-1 and splitting runs by value
    therefore visits full vectors in lexicographic order, with no dead ends.
    With ``injective_components`` two source components may not land in the
    same target component (decided at each component's first vertex).
    """
    n = f.n
    comp_of = component_index(f)
    slot = [0] * n
    seen: Counter = Counter()
    for v in range(n):
        slot[v] = seen[comp_of[v]]
        seen[comp_of[v]] += 1
    runs = [(0, len(lst)) for lst in comp_lists]
    used: set[int] = set()
    g = [0] * n

    def walk(v: int) -> Iterator[Endofunction]:
        if v == n:
            yield Endofunction(tuple(g))
            return
        c = comp_of[v]
        j = slot[v]
        lst = comp_lists[c]
        lo, hi = runs[c]
        i = lo
        while i < hi:
            val = lst[i][j]
            k = i + 1
            while k < hi and lst[k][j] == val:
                k += 1
            claim = injective_components and j == 0
            if claim and comp_of[val] in used:
                i = k
                continue
            if claim:
                used.add(comp_of[val])
            runs[c] = (i, k)
            g[v] = val
            yield from walk(v + 1)
            if claim:
                used.discard(comp_of[val])
            i = k
        runs[c] = (lo, hi)

    if all(comp_lists) or n == 0:
        yield from walk(0)


def enumerate_centralizer(f: Endofunction, bijective_only: bool = False) -> Iterator[Endofunction]:
    """Yield every g commuting with f (or every such permutation) once, in lex order.

    The bijective stream only ever combines isomorphisms between components of
    the same class, one target per source, instead of filtering all homomorphisms.
    """
    comps = components(f)
    if bijective_only:
        cls_of = {}
        for c in classify_components(f):
            for i in c.members:
                cls_of[i] = c.members
        lists = []
        for i, p in enumerate(comps):
            vecs = []
            for j in cls_of[i]:
                vecs.extend(_iso_vectors(p, comps[j]))
            vecs.sort()
            lists.append(vecs)
        yield from _lex_combine(f, lists, injective_components=True)
    else:
        yield from _lex_combine(f, [_hom_vectors(p, f) for p in comps], injective_components=False)


# -- structure of a commuting g ---------------------------------------------------

def induced_component_map(f: Endofunction, g: Endofunction) -> dict[int, int]:
    """Component i of f is carried by g into component ``result[i]``."""
    if not commutes(f, g):
        raise NotCommuting("g does not commute with f")
    comp_of = component_index(f)
    return {i: comp_of[g(pc.cycle[0])] for i, pc in enumerate(components(f))}


def _require_commuting_perms(f: Endofunction, g: Endofunction) -> None:
    if not (is_bijective(f) and is_bijective(g)):
        raise NotBijective("f and g must both be permutations")
    if not commutes(f, g):
        raise NotCommuting("g does not commute with f")


def predicted_cycle_type(f: Endofunction, g: Endofunction) -> tuple[int, ...]:
    """Cycle lengths of g, derived from how g permutes and shifts the cycles of f.

    Let g carry the f-cycles ``Z_0 -> Z_1 -> ... -> Z_{k-1} -> Z_0`` (all of
    length i) around a cycle of length k, and let ``g^k`` act on ``Z_0`` as the
    shift ``f^j``.  The union then splits into ``gcd(i, j)`` g-cycles of length
    ``k * i / gcd(i, j)``.  With ``j = 0`` that is i cycles of length k, and
    with ``k = 1`` it is gcd(i, j) cycles of length i / gcd(i, j).
    """
    _require_commuting_perms(f, g)
    comps = components(f)
    carried = induced_component_map(f, g)
    lengths = []
    done = set()
    for start in range(len(comps)):
        if start in done:
            continue
        orbit = [start]
        while carried[orbit[-1]] != start:
            orbit.append(carried[orbit[-1]])
        done.update(orbit)
        k = len(orbit)
        cyc = comps[start].cycle
        i = len(cyc)
        x = cyc[0]
        y = x
        for _ in range(k):
            y = g(y)
        j = cyc.index(y)  # g^k(x) = f^j(x), since cyc[j] = f^j(cyc[0])
        d = gcd(i, j)
        lengths.extend([k * i // d] * d)
    return tuple(sorted(lengths))


def tree_forest_shape(
    f: Endofunction, g: Endofunction, src_cycle: int, tgt_cycle: int
) -> list[tuple[int, tuple[int, ...]]]:
    """The g-edges from one f-cycle into another, grouped as in-trees.

    ``src_cycle`` and ``tgt_cycle`` are component indices of the permutation f,
    and g must carry the first onto the second.  Returns ``(root, leaves)`` for
    every target vertex; for cycle lengths i onto k this is k trees of
    ``i / k + 1`` vertices.
    """
    if not is_bijective(f):
        raise NotBijective("f must be a permutation")
    if not commutes(f, g):
        raise NotCommuting("g does not commute with f")
    if src_cycle == tgt_cycle:
        raise PreconditionError("source and target cycles must be distinct")
    comps = components(f)
    src, tgt = comps[src_cycle].cycle, comps[tgt_cycle].cycle
    if any(g(x) not in tgt for x in src):
        raise PreconditionError("g does not map the source cycle into the target cycle")
    leaves: dict[int, list[int]] = {w: [] for w in tgt}
    for x in src:
        leaves[g(x)].append(x)
    return [(w, tuple(sorted(leaves[w]))) for w in sorted(tgt)]

"""Brute-force reference implementations.

Everything here works straight from the definitions (scan every candidate
map, keep the ones that preserve edges) and shares nothing with the
dynamic programs, tree codes or class machinery it is used to check.
Scans are vectorised with numpy and processed in chunks.

Bounds protect against accidental huge scans.  ``FGC_MAX_BRUTE_N`` in the
environment replaces the default domain-size bounds; ``force=True`` lifts
them entirely after logging the number of candidates.
"""

from __future__ import annotations

import logging
import os
from itertools import islice, permutations
from math import factorial
from typing import Iterable, Iterator, Optional

import numpy as np

from .decompose import RootedTree
from .errors import BoundExceeded, PreconditionError
from .funcgraph import Endofunction

__all__ = [
    "brute_centralizer",
    "brute_centralizer_count",
    "brute_hom_count",
    "brute_antichains",
    "brute_tree_aut",
    "max_brute_n",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 8
DEFAULT_MAX_N_BIJECTIVE = 9
MAX_HOM_CANDIDATES = 10**7
MAX_ANTICHAIN_VERTICES = 20
MAX_AUT_VERTICES = 8
CHUNK_ROWS = 1 << 18


def max_brute_n(bijective_only: bool = False) -> int:
    env = os.environ.get("FGC_MAX_BRUTE_N")
    if env:
        return int(env)
    return DEFAULT_MAX_N_BIJECTIVE if bijective_only else DEFAULT_MAX_N


def _guard(ok: bool, candidates: int, what: str, force: bool) -> None:
    if ok:
        return
    if not force:
        raise BoundExceeded(f"{what}: {candidates} candidates exceed the brute-force bound")
    log.warning("%s: forced scan of %d candidates", what, candidates)


def _all_maps(n_values: int, length: int) -> Iterator[np.ndarray]:
    """All vectors in ``range(n_values) ** length``, lexicographic, in row chunks."""
    total = n_values**length
    dtype = np.int16 if n_values < 2**15 else np.int64
    for start in range(0, total, CHUNK_ROWS):
        idx = np.arange(start, min(total, start + CHUNK_ROWS), dtype=np.int64)
        rows = np.empty((len(idx), length), dtype=dtype)
        for pos in range(length - 1, -1, -1):
            rows[:, pos] = idx % n_values
            idx //= n_values
        yield rows


def _all_perms(n: int) -> Iterator[np.ndarray]:
    it = permutations(range(n))
    while True:
        chunk = list(islice(it, CHUNK_ROWS))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int16).reshape(len(chunk), n)


def _commuting_rows(f: Endofunction, bijective_only: bool) -> Iterator[np.ndarray]:
    fa = np.array(f.images, dtype=np.int64)
    chunks = _all_perms(f.n) if bijective_only else _all_maps(f.n, f.n)
    for rows in chunks:
        # f o g  vs  g o f
        mask = (fa[rows] == rows[:, fa]).all(axis=1)
        yield rows[mask]


def _scan_guard(f: Endofunction, bijective_only: bool, force: bool) -> None:
    n = f.n
    candidates = factorial(n) if bijective_only else n**n
    _guard(n <= max_brute_n(bijective_only), candidates, "centralizer scan", force)


def brute_centralizer(
    f: Endofunction, bijective_only: bool = False, force: bool = False
) -> list[Endofunction]:
    """Every g (or every bijective g) with ``f o g == g o f``, sorted lexicographically."""
    _scan_guard(f, bijective_only, force)
    if f.n == 0:
        return [f]
    out = []
    for rows in _commuting_rows(f, bijective_only):
        out.extend(Endofunction(tuple(r)) for r in rows.tolist())
    return out


def brute_centralizer_count(f: Endofunction, bijective_only: bool = False, force: bool = False) -> int:
    _scan_guard(f, bijective_only, force)
    if f.n == 0:
        return 1
    return sum(len(rows) for rows in _commuting_rows(f, bijective_only))


def brute_hom_count(
    src_vertices: Iterable[int],
    f: Endofunction,
    tgt_f: Endofunction,
    tgt_vertices: Optional[Iterable[int]] = None,
    force: bool = False,
) -> int:
    """Count maps ``h`` from ``src_vertices`` into the graph of ``tgt_f`` with
    ``tgt_f(h(v)) == h(f(v))`` for every source vertex.

    ``src_vertices`` must be closed under ``f`` (a union of components).
    ``tgt_vertices`` restricts the allowed images; all of ``tgt_f``'s domain by default.
    """
    src = sorted(set(src_vertices))
    index = {v: i for i, v in enumerate(src)}
    try:
        next_idx = np.array([index[f(v)] for v in src], dtype=np.int64)
    except KeyError:
        raise PreconditionError("source vertex set is not closed under f") from None
    tgt = sorted(set(range(tgt_f.n) if tgt_vertices is None else tgt_vertices))
    candidates = len(tgt) ** len(src)
    _guard(candidates <= MAX_HOM_CANDIDATES, candidates, "homomorphism scan", force)
    if not src:
        return 1
    if not tgt:
        return 0
    tgt_arr = np.array(tgt, dtype=np.int64)
    tf = np.array(tgt_f.images, dtype=np.int64)
    count = 0
    for rows in _all_maps(len(tgt), len(src)):
        images = tgt_arr[rows]
        count += int((tf[images] == images[:, next_idx]).all(axis=1).sum())
    return count


def _strictly_below(t: RootedTree, x: int, y: int) -> bool:
    # x < y: x is reached from y by following parent edges at least once
    v = y
    while v in t.parent_of:
        v = t.parent_of[v]
        if v == x:
            return True
    return False


def brute_antichains(t: RootedTree) -> list[frozenset]:
    """All subsets of non-root vertices without a comparable pair, by a 2^k filter."""
    proper = sorted(v for v in t.vertices if v != t.root)
    k = len(proper)
    if k > MAX_ANTICHAIN_VERTICES:
        raise BoundExceeded(f"2^{k} subsets exceed the antichain scan bound")
    comparable = {
        (a, b) for a in proper for b in proper if a != b and _strictly_below(t, a, b)
    }
    out = []
    for mask in range(1 << k):
        chosen = [proper[i] for i in range(k) if mask >> i & 1]
        if not any((a, b) in comparable for a in chosen for b in chosen):
            out.append(frozenset(chosen))
    return sorted(out, key=lambda a: (len(a), sorted(a)))


def brute_tree_aut(t: RootedTree) -> int:
    """Root-fixing bijections of the vertex set that map every edge to an edge."""
    verts = list(t.vertices)
    if len(verts) > MAX_AUT_VERTICES:
        raise BoundExceeded(f"{len(verts)}! permutations exceed the automorphism scan bound")
    others = [v for v in verts if v != t.root]
    edge_set = set(t.parent_of.items())
    count = 0
    for perm in permutations(others):
        sigma = dict(zip(others, perm))
        sigma[t.root] = t.root
        if all((sigma[c], sigma[p]) in edge_set for c, p in edge_set):
            count += 1
    return count

"""Named graph families and exhaustive extremal searches.

Families:

* ``Z(n)``: a bare directed n-cycle.
* ``U(m, t)``: an m-cycle with one pendant directed path of t vertices.
* ``W(m, t)``: an m-cycle with t leaves hanging directly off one cycle vertex.
* ``union``: disjoint union of the above, relabelled consecutively.

Searches scan every candidate function, collapse them to weak-isomorphism
classes via :func:`fgc.canonical.class_key`, and report every class that
attains the extremum (ties are never broken).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import prod
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .canonical import aut_count, class_key, classify_components
from .centralizer import count_bij_centralizer, count_centralizer
from .decompose import components
from .errors import BadParams, BoundExceeded, InfeasibleM
from .funcgraph import Endofunction

__all__ = [
    "FamilySpec",
    "construct",
    "Z",
    "U",
    "W",
    "union",
    "MODES",
    "class_counts",
    "min_centralizer",
    "is_rigid_by_conditions",
    "min_bij_centralizer_rigidity",
    "functions_with_cycles",
    "max_centralizer_fixed_cycles",
    "w_centralizer_size",
    "fixed_cycles_max_formula",
    "search_rows",
    "rows_to_csv",
    "partitions",
    "permutation_with_cycle_type",
    "all_endofunctions",
    "fig6_value",
    "MixedCycleCheck",
]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = field(default=())

    def __str__(self) -> str:
        if self.family == "union":
            return "+".join(str(p) for p in self.parts)
        return f"{self.family}:{','.join(map(str, self.params))}"


def Z(n: int) -> FamilySpec:
    return FamilySpec("Z", (n,))


def U(m: int, t: int) -> FamilySpec:
    return FamilySpec("U", (m, t))


def W(m: int, t: int) -> FamilySpec:
    return FamilySpec("W", (m, t))


def union(*parts: FamilySpec) -> FamilySpec:
    return FamilySpec("union", (), tuple(parts))


def _images(spec: FamilySpec) -> list[int]:
    fam, p = spec.family, spec.params
    if fam == "union":
        if spec.params:
            raise BadParams("union takes parts, not integer parameters")
        out: list[int] = []
        for part in spec.parts:
            offset = len(out)
            out.extend(x + offset for x in _images(part))
        return out
    if spec.parts:
        raise BadParams(f"family {fam} takes no parts")
    if fam == "Z":
        if len(p) != 1 or p[0] < 1:
            raise BadParams("Z needs one parameter n >= 1")
        n = p[0]
        return [(i + 1) % n for i in range(n)]
    if fam in ("U", "W"):
        if len(p) != 2 or p[0] < 1 or p[1] < 0:
            raise BadParams(f"{fam} needs parameters m >= 1, t >= 0")
        m, t = p
        cyc = [(i + 1) % m for i in range(m)]
        if fam == "W":
            return cyc + [0] * t
        return cyc + [0 if i == 0 else m + i - 1 for i in range(t)]
    raise BadParams(f"unknown family {fam!r}")


def construct(spec: FamilySpec) -> Endofunction:
    """Build the family member: cycle vertices first, then tree vertices ascending."""
    return Endofunction(tuple(_images(spec)))


# -- candidate generators -----------------------------------------------------------

def all_endofunctions(n: int) -> Iterator[Endofunction]:
    for images in product(range(n), repeat=n):
        yield Endofunction(images)


def all_permutations(n: int) -> Iterator[Endofunction]:
    for images in permutations(range(n)):
        yield Endofunction(images)


def partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def permutation_with_cycle_type(lengths: Sequence[int]) -> Endofunction:
    return construct(union(*(Z(k) for k in lengths)))


def functions_with_cycles(n: int, cycles: Sequence[int]) -> Iterator[Endofunction]:
    """One or more representatives of every function on n points with exactly
    the given cycle lengths.

    The cycles are laid out on the first ``sum(cycles)`` vertices; each remaining
    vertex picks any parent that keeps the tree vertices acyclic.  Every
    function with that cycle multiset is conjugate to one of these.
    """
    base = construct(union(*(Z(k) for k in cycles))).images if cycles else ()
    s = len(base)
    if s > n or (n and not cycles):
        raise InfeasibleM(f"cycle lengths {tuple(cycles)} do not fit on {n} points")
    tree = range(s, n)
    for parents in product(range(n), repeat=n - s):
        images = base + parents
        ok = True
        for v in tree:
            steps = 0
            w = v
            while w >= s:
                w = images[w]
                steps += 1
                if steps > n:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield Endofunction(images)


# -- searches -----------------------------------------------------------------------

MODES = ("C_over_bij", "Cbij_over_bij", "C_over_all")
DEFAULT_BOUNDS = {"C_over_bij": 7, "Cbij_over_bij": 7, "C_over_all": 6, "rigid": 6, "fixed_cycles": 7}


def _check_bound(n: int, kind: str, bound: Optional[int]) -> None:
    limit = DEFAULT_BOUNDS[kind] if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"exhaustive search at n={n} exceeds the bound {limit}")


def class_counts(
    candidates: Iterable[Endofunction], measure: Callable[[Endofunction], int]
) -> dict[str, tuple[Endofunction, int]]:
    """Collapse candidates to weak-isomorphism classes and measure one representative each."""
    reps: dict[str, Endofunction] = {}
    for f in candidates:
        reps.setdefault(class_key(f), f)
    return {k: (f, measure(f)) for k, f in sorted(reps.items())}


def _mode_search(n: int, mode: str, bound: Optional[int]) -> dict[str, tuple[Endofunction, int]]:
    if mode not in MODES:
        raise BadParams(f"mode must be one of {MODES}")
    _check_bound(n, mode, bound)
    if mode == "C_over_all":
        return class_counts(all_endofunctions(n), count_centralizer)
    measure = count_centralizer if mode == "C_over_bij" else count_bij_centralizer
    return class_counts(all_permutations(n), measure)


def _extremes(table: dict[str, tuple[Endofunction, int]], pick) -> tuple[int, frozenset[str]]:
    best = pick(c for _, c in table.values())
    return best, frozenset(k for k, (_, c) in table.items() if c == best)


def min_centralizer(n: int, mode: str, bound: Optional[int] = None) -> tuple[int, frozenset[str]]:
    """Exact minimum of the chosen count and every minimising class key.

    ``C_over_bij``: |C(f)| over permutations; ``Cbij_over_bij``: |C_bij(f)|
    over permutations; ``C_over_all``: |C(f)| over all endofunctions.
    """
    return _extremes(_mode_search(n, mode, bound), min)


def is_rigid_by_conditions(f: Endofunction) -> bool:
    """Structural test for |C_bij(f)| = 1: pairwise non-isomorphic components,
    every component of index 1, and only rigid trees."""
    classes = classify_components(f)
    return (
        all(c.n_T == 1 and c.s_T == 1 for c in classes)
        and all(aut_count(t) == 1 for pc in components(f) for t in pc.trees)
    )


def min_bij_centralizer_rigidity(n: int, bound: Optional[int] = None) -> frozenset[str]:
    """Class keys of all f on n points whose only commuting permutation is the identity."""
    _check_bound(n, "rigid", bound)
    table = class_counts(all_endofunctions(n), count_bij_centralizer)
    return frozenset(k for k, (_, c) in table.items() if c == 1)


def max_centralizer_fixed_cycles(
    n: int, cycles: Sequence[int], bound: Optional[int] = None
) -> tuple[int, frozenset[str]]:
    """Maximum |C(f)| over functions whose cycle lengths are exactly ``cycles``."""
    _check_bound(n, "fixed_cycles", bound)
    cycles = sorted(cycles)
    if any(c < 1 for c in cycles) or sum(cycles) > n or (n and not cycles):
        raise InfeasibleM(f"cycle lengths {tuple(cycles)} are infeasible on {n} points")
    return _extremes(class_counts(functions_with_cycles(n, cycles), count_centralizer), max)


def w_centralizer_size(m: int, t: int) -> int:
    """Closed form ``m - 1 + (t + 1)**t`` for the single-cycle maximiser W(m, t)."""
    return m - 1 + (t + 1) ** t


def fixed_cycles_max_formula(cycles: Sequence[int], t: int) -> int:
    """Closed-form maximum for a cycle multiset with t tree vertices.

    All trees sit as leaves on one shortest cycle; every other cycle
    contributes the total length of the cycles whose lengths divide it.
    """
    ms = sorted(cycles)
    others = prod(sum(d for d in ms if mi % d == 0) for mi in ms[1:])
    return others * ((t + 1) ** t - 1 + sum(d for d in ms if d == ms[0]))


def search_rows(
    n: int, mode: str, cycles: Optional[Sequence[int]] = None, bound: Optional[int] = None
) -> list[tuple[str, int, bool]]:
    """``(class_key, count, is_extremal)`` for every class examined by a search.

    ``mode`` is one of :data:`MODES`, ``"rigid"`` (|C_bij| = 1 is extremal)
    or ``"max"`` (requires ``cycles``).
    """
    if mode == "max":
        if cycles is None:
            raise BadParams("mode 'max' needs a cycle multiset")
        _check_bound(n, "fixed_cycles", bound)
        cs = sorted(cycles)
        if any(c < 1 for c in cs) or sum(cs) > n or (n and not cs):
            raise InfeasibleM(f"cycle lengths {tuple(cs)} are infeasible on {n} points")
        table = class_counts(functions_with_cycles(n, cs), count_centralizer)
        best = max(c for _, c in table.values())
    elif mode == "rigid":
        _check_bound(n, "rigid", bound)
        table = class_counts(all_endofunctions(n), count_bij_centralizer)
        best = 1
    else:
        table = _mode_search(n, mode, bound)
        best = min(c for _, c in table.values())
    return [(k, c, c == best) for k, (_, c) in table.items()]


def rows_to_csv(rows: Iterable[tuple[str, int, bool]]) -> str:
    lines = ["class_key,count,is_extremal"]
    lines.extend(f"{k},{c},{str(e).lower()}" for k, c, e in rows)
    return "\n".join(lines) + "\n"


# -- the mixed-cycle maximiser example --------------------------------------------------

CLAIMED_MIXED_VALUE = 1072


@dataclass(frozen=True)
class MixedCycleCheck:
    """Centralizer size of W(2,3) + Z(2) + Z(4) by every available route."""

    graph: Endofunction
    total: int
    row_sums: tuple[int, ...]
    oracle_row_sums: tuple[int, ...]
    formula_value: int
    claimed: int
    alternate_reading_total: int

    @property
    def oracle_total(self) -> int:
        return prod(self.oracle_row_sums)

    @property
    def matches_oracle(self) -> bool:
        return self.total == self.oracle_total and self.row_sums == self.oracle_row_sums

    @property
    def matches_claim(self) -> bool:
        return self.total == self.claimed

    def describe(self) -> str:
        rows = " * ".join(map(str, self.row_sums))
        status = "matches" if self.matches_claim else "DIFFERS FROM"
        return (
            f"W(2,3)+Z(2)+Z(4): engine {self.total} = {rows}, oracle {self.oracle_total}, "
            f"closed form {self.formula_value}; {status} the claimed {self.claimed}. "
            f"W(2,3)+2Z(3)+Z(4) gives {self.alternate_reading_total}."
        )


def fig6_value() -> MixedCycleCheck:
    """Count C(f) for cycle lengths {2, 2, 4} with three leaves on one 2-cycle,
    per component and by brute force, and compare against the claimed 1072."""
    from .centralizer import hom_matrix
    from .oracle import brute_hom_count

    f = construct(union(W(2, 3), Z(2), Z(4)))
    rows = tuple(sum(r) for r in hom_matrix(f))
    oracle_rows = tuple(brute_hom_count(pc.vertices, f, f) for pc in components(f))
    alt = construct(union(W(2, 3), Z(3), Z(3), Z(4)))
    return MixedCycleCheck(
        graph=f,
        total=prod(rows),
        row_sums=rows,
        oracle_row_sums=oracle_rows,
        formula_value=fixed_cycles_max_formula([2, 2, 4], 3),
        claimed=CLAIMED_MIXED_VALUE,
        alternate_reading_total=count_centralizer(alt),
    )

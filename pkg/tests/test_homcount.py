import pytest

from fgc.decompose import components, tree_at
from fgc.errors import DivisibilityViolation, InvalidTriple, NotAHomomorphism
from fgc.extremal import Z, construct, union
from fgc.funcgraph import Endofunction, identity
from fgc.homcount import (
    HomTriple,
    antichain_count,
    antichains,
    enumerate_homs,
    hom_anchored,
    hom_pseudocycle,
    hom_to_triple,
    hom_tree_rooted,
    hom_via_theorem34,
    theorem34_terms,
    triple_to_hom,
)
from fgc.named import named
from fgc.oracle import brute_antichains, brute_hom_count

EX7 = named("ex7")
(P7,) = components(EX7)


def test_tree_rooted_examples():
    assert hom_tree_rooted(tree_at(identity(1), 0), EX7, 2) == 1
    # anchor 0 -> 2: the chain tree at 0 lands on root 2
    assert hom_tree_rooted(tree_at(EX7, 0), EX7, 2) == 3
    # anchor 0 -> 3: the star tree at 1 lands on root 0
    assert hom_tree_rooted(tree_at(EX7, 1), EX7, 0) == 4


def test_ex7_counts():
    assert [hom_anchored(P7, P7, EX7, k) for k in range(4)] == [162, 18, 12, 108]
    assert hom_pseudocycle(P7, P7, EX7) == 300
    assert hom_via_theorem34(P7, P7, EX7) == 300


def test_anchored_k2_terms():
    terms = [c for _, _, c in theorem34_terms(P7, P7, EX7, k=2) if c]
    assert sum(terms) == 12
    assert sorted(terms) == [1, 1, 1, 1, 2, 2, 2, 2]
    seqs = {seq for _, seq, c in theorem34_terms(P7, P7, EX7, k=2) if c}
    assert (frozenset({5}), frozenset(), frozenset({8}), frozenset()) in seqs


def test_cycle_examples():
    f = Endofunction((1, 2, 3, 0, 5, 4))
    c4, c2 = components(f)
    assert hom_pseudocycle(c4, c2, f) == 2
    assert hom_pseudocycle(c2, c4, f) == 0
    assert hom_via_theorem34(c4, c2, f) == 2
    assert hom_via_theorem34(c4, c4, f) == 4
    assert all(hom_anchored(c4, c4, f, k) == 1 for k in range(4))
    with pytest.raises(DivisibilityViolation):
        hom_anchored(c2, c4, f, 0)
    with pytest.raises(ValueError):
        hom_anchored(c4, c2, f, 5)
    maps = list(enumerate_homs(c4, f, c2))
    assert maps == [{0: 4, 1: 5, 2: 4, 3: 5}, {0: 5, 1: 4, 2: 5, 3: 4}]


def test_antichains_examples():
    assert antichains(tree_at(identity(1), 0)) == [frozenset()]
    chain = tree_at(Endofunction((0, 0, 1, 2)), 0)
    assert antichain_count(chain) == 4 == len(brute_antichains(chain))
    t = tree_at(named("ex9"), 0)
    found = antichains(t)
    assert len(found) == 15 == antichain_count(t)
    assert found == brute_antichains(t)
    assert frozenset({2, 3, 4}) in found and frozenset({3, 4, 5}) in found


def test_enumerate_homs_ex7():
    maps = list(enumerate_homs(P7, EX7))
    assert len(maps) == 300
    assert len({tuple(m.values()) for m in maps}) == 300
    assert all(EX7(m[v]) == m[EX7(v)] for m in maps for v in m)
    vecs = [tuple(m.values()) for m in maps]
    assert vecs == sorted(vecs)


def test_fixed_point_into_graph():
    f = Endofunction((0, 0, 2, 2, 1))
    single = components(identity(1))[0]
    assert len(list(enumerate_homs(single, f))) == 2


def test_triples():
    maps = list(enumerate_homs(P7, EX7))
    flat = next(m for m in maps if all(m[v] in (0, 1, 2, 3) for v in m))
    tau = hom_to_triple(flat, P7, EX7)
    assert all(not a for a in tau.antichains)
    for h in maps:
        assert triple_to_hom(hom_to_triple(h, P7, EX7), P7, EX7) == h
    marked = next(
        h for h in maps
        if hom_to_triple(h, P7, EX7).antichains == (frozenset({5}), frozenset(), frozenset({8}), frozenset())
    )
    assert marked[0] == 2


def test_triple_errors():
    h = next(enumerate_homs(P7, EX7))
    bad = dict(h)
    bad[5] = 3 if h[5] != 3 else 2
    with pytest.raises(NotAHomomorphism):
        hom_to_triple(bad, P7, EX7)
    tau = hom_to_triple(h, P7, EX7)
    with pytest.raises(InvalidTriple):
        triple_to_hom(HomTriple(4, tau.antichains, tau.tree_homs), P7, EX7)
    with pytest.raises(InvalidTriple):
        triple_to_hom(HomTriple(tau.anchor_image, tau.antichains[:2], tau.tree_homs), P7, EX7)
    with pytest.raises(InvalidTriple):
        triple_to_hom(
            HomTriple(0, (frozenset({4, 5}), frozenset(), frozenset(), frozenset()), {4: {4: 4, 5: 5}, 5: {5: 5}}),
            P7,
            EX7,
        )


def test_brute_hom_fig6_z4_row():
    f = construct(union(Z(4), Z(2), Z(2)))
    assert brute_hom_count(components(f)[0].vertices, f, f) == 8

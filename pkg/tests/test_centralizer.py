from math import factorial

import pytest

from fgc.centralizer import (
    centralizer_report,
    count_bij_centralizer,
    count_bij_centralizer_perm,
    count_centralizer,
    count_centralizer_perm,
    enumerate_centralizer,
    hom_matrix,
    induced_component_map,
    predicted_cycle_type,
    tree_forest_shape,
    tree_isomorphisms,
)
from fgc.decompose import tree_at
from fgc.errors import NotBijective, NotCommuting, PreconditionError
from fgc.extremal import Z, construct, union
from fgc.funcgraph import Endofunction, commutes, compose, cycle_type, from_cycles, identity, power
from fgc.named import named, powmod
from fgc.oracle import brute_centralizer, brute_centralizer_count


def test_count_centralizer_examples():
    assert count_centralizer(named("ex7")) == 300
    for n in range(1, 6):
        assert count_centralizer(identity(n)) == n**n
        assert count_centralizer(construct(Z(n))) == n
    assert count_centralizer(Endofunction((0, 0, 0))) == 9 == brute_centralizer_count(Endofunction((0, 0, 0)))


def test_count_bij_examples():
    assert count_bij_centralizer(named("ex5")) == 8
    assert count_bij_centralizer(identity(5)) == 120
    f = powmod(2, 9)
    assert count_bij_centralizer(f) == brute_centralizer_count(f, True) == 4


def test_permutation_formulas():
    for n in range(3, 8):
        f = from_cycles(n, [tuple(range(1, n))])
        assert count_bij_centralizer_perm(f) == n - 1
        assert count_centralizer_perm(construct(Z(n))) == n
    assert count_bij_centralizer_perm(identity(4)) == 24
    assert count_bij_centralizer_perm(from_cycles(4, [(0, 1), (2, 3)])) == 8
    assert count_centralizer_perm(from_cycles(3, [(0, 1)])) == 3 == brute_centralizer_count(from_cycles(3, [(0, 1)]))
    with pytest.raises(NotBijective):
        count_centralizer_perm(Endofunction((0, 0)))


def test_report():
    rep = centralizer_report(named("ex7"))
    assert rep.total == 300 and rep.per_component == ((300,),)
    assert rep.bijective_total == count_bij_centralizer(named("ex7"))
    m = hom_matrix(powmod(2, 9))
    assert m[0][2] == m[1][2] == 0 and m[2] == [9, 4, 8]


def test_enumeration_examples():
    assert [g.images for g in enumerate_centralizer(identity(2))] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    gs = list(enumerate_centralizer(named("ex7")))
    assert len(gs) == 300 and all(commutes(named("ex7"), g) for g in gs)
    f = from_cycles(5, [(1, 2, 3, 4)])
    perms = list(enumerate_centralizer(f, bijective_only=True))
    assert sorted(perms, key=lambda g: g.images) == perms
    assert len(perms) == 4 and set(perms) == {power(f, k) for k in range(4)}
    g = Endofunction((1, 2, 0))
    assert [h.images for h in enumerate_centralizer(g)][:2] == [(0, 1, 2), (1, 2, 0)]


def test_enumeration_matches_brute_small():
    for f in (named("ex4"), Endofunction((1, 0, 0, 2)), Endofunction((0, 0, 1, 1, 4))):
        assert list(enumerate_centralizer(f)) == brute_centralizer(f)
        assert list(enumerate_centralizer(f, True)) == brute_centralizer(f, True)


def test_tree_isomorphisms():
    f = Endofunction((0, 0, 0, 1, 2))
    t = tree_at(f, 0)
    assert len(tree_isomorphisms(t, t)) == 2


def test_induced_component_map():
    f = named("ex4")
    assert induced_component_map(f, identity(6)) == {0: 0, 1: 1}
    g = Endofunction((4, 5, 4, 5, 4, 5))
    assert induced_component_map(f, g) == {0: 1, 1: 1}
    with pytest.raises(NotCommuting):
        induced_component_map(f, Endofunction((1, 0, 2, 3, 4, 5)))


def test_predicted_cycle_type_examples():
    f = from_cycles(6, [(0, 1, 2), (3, 4, 5)])
    assert predicted_cycle_type(f, identity(6)) == (1,) * 6
    swap = from_cycles(6, [(0, 3), (1, 4), (2, 5)])
    assert predicted_cycle_type(f, swap) == (2, 2, 2) == cycle_type(swap)
    c6 = construct(Z(6))
    assert predicted_cycle_type(c6, compose(c6, c6)) == (3, 3)
    f2 = from_cycles(4, [(0, 1), (2, 3)])
    g = from_cycles(4, [(0, 2, 1, 3)])
    assert commutes(f2, g) and predicted_cycle_type(f2, g) == (4,) == cycle_type(g)


def test_tree_forest_shape():
    f = from_cycles(6, [(0, 1, 2, 3), (4, 5)])
    g = Endofunction((4, 5, 4, 5, 4, 5))
    shape = tree_forest_shape(f, g, 0, 1)
    assert shape == [(4, (0, 2)), (5, (1, 3))]
    f3 = construct(union(Z(6), Z(3)))
    g3 = Endofunction(tuple(6 + (x % 3) for x in range(6)) + (6, 7, 8))
    shape = tree_forest_shape(f3, g3, 0, 1)
    assert len(shape) == 3 and all(len(leaves) + 1 == 3 for _, leaves in shape)
    f4 = from_cycles(4, [(0, 1), (2, 3)])
    g4 = from_cycles(4, [(0, 2), (1, 3)])
    assert [len(l) + 1 for _, l in tree_forest_shape(f4, g4, 0, 1)] == [2, 2]
    with pytest.raises(PreconditionError):
        tree_forest_shape(f4, g4, 0, 0)

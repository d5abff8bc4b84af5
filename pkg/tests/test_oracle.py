import pytest

from fgc.decompose import components, tree_at
from fgc.errors import BoundExceeded, PreconditionError
from fgc.funcgraph import Endofunction, identity
from fgc.named import named
from fgc.oracle import (
    brute_antichains,
    brute_centralizer,
    brute_centralizer_count,
    brute_hom_count,
    brute_tree_aut,
    max_brute_n,
)


def test_brute_centralizer_examples():
    assert [g.images for g in brute_centralizer(Endofunction((1, 0)))] == [(0, 1), (1, 0)]
    assert len(brute_centralizer(identity(3), bijective_only=True)) == 6
    assert brute_centralizer_count(Endofunction(())) == 1


def test_bounds(monkeypatch):
    with pytest.raises(BoundExceeded):
        brute_centralizer_count(named("ex7"))
    monkeypatch.setenv("FGC_MAX_BRUTE_N", "3")
    assert max_brute_n() == 3
    with pytest.raises(BoundExceeded):
        brute_centralizer_count(identity(4))
    assert brute_centralizer_count(identity(4), force=True) == 256


def test_brute_hom_count():
    f = Endofunction((1, 2, 3, 0, 5, 4))
    assert brute_hom_count([0, 1, 2, 3], f, f, [4, 5]) == 2
    ex7 = named("ex7")
    with pytest.raises(BoundExceeded):
        brute_hom_count(range(10), ex7, ex7)
    ex4 = named("ex4")
    assert brute_hom_count(range(6), ex4, ex4) == 12
    with pytest.raises(PreconditionError):
        brute_hom_count([4], ex7, ex7)


def test_brute_antichains_and_aut():
    assert len(brute_antichains(tree_at(named("ex9"), 0))) == 15
    assert len(brute_antichains(tree_at(Endofunction((0, 0, 1)), 0))) == 3
    assert brute_antichains(tree_at(identity(1), 0)) == [frozenset()]
    assert [brute_tree_aut(t) for t in components(named("ex5"))[0].trees] == [2, 1, 2, 1]
    assert brute_tree_aut(tree_at(Endofunction((0, 0, 1, 2)), 0)) == 1
    assert brute_tree_aut(tree_at(Endofunction((0,) * 5), 0)) == 24

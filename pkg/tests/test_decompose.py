import pytest

from fgc.decompose import (
    components,
    component_index,
    cycle_vertices,
    height,
    heights,
    remove_root,
    subtree,
    tree_at,
)
from fgc.errors import NotACycleVertex
from fgc.funcgraph import Endofunction, identity
from fgc.named import named, powmod


def test_square_mod_9_components():
    comps = components(powmod(2, 9))
    assert [set(pc.vertices) for pc in comps] == [{0, 3, 6}, {1, 8}, {2, 4, 5, 7}]
    assert [len(pc.cycle) for pc in comps] == [1, 1, 2]
    assert cycle_vertices(powmod(2, 9)) == {0, 1, 4, 7}


def test_identity_and_single_cycle():
    comps = components(identity(4))
    assert len(comps) == 4 and all(pc.size == 1 for pc in comps)
    (pc,) = components(Endofunction((1, 2, 3, 0)))
    assert pc.cycle == (0, 1, 2, 3)
    assert all(len(t.vertices) == 1 for t in pc.trees)


def test_cycle_starts_at_min_vertex_and_order():
    f = Endofunction((3, 0, 1, 2, 4))
    comps = components(f)
    assert comps[0].cycle == (0, 3, 2, 1)
    assert component_index(f) == (0, 0, 0, 0, 1)


def test_ex7_trees():
    f = named("ex7")
    assert cycle_vertices(f) == {0, 1, 2, 3}
    t0 = tree_at(f, 0)
    assert set(t0.vertices) == {0, 4, 5}
    assert [t0.height_of[v] for v in (0, 4, 5)] == [0, 1, 2]
    assert tree_at(f, 3).vertices == (3,)
    (rest,) = remove_root(t0)
    assert rest.root == 4 and set(rest.vertices) == {4, 5}
    with pytest.raises(NotACycleVertex):
        tree_at(f, 4)


def test_heights():
    f = named("ex7")
    assert height(f, 0) == 0 and height(f, 5) == 2
    assert heights(f) == (0, 0, 0, 0, 1, 2, 1, 1, 1, 1)


def test_remove_root_star_and_single():
    f = Endofunction((0, 0, 0, 0, 0))
    assert len(remove_root(tree_at(f, 0))) == 4
    assert remove_root(tree_at(identity(1), 0)) == []


def test_subtree_and_ancestry():
    t = tree_at(named("ex9"), 0)
    s = subtree(t, 1)
    assert set(s.vertices) == {1, 3, 4}
    assert t.is_ancestor(0, 4) and not t.is_ancestor(4, 0)
    order = t.postorder()
    assert order[-1] == 0 and order.index(3) < order.index(1)


def test_partition_of_vertices():
    f = powmod(3, 10)
    seen = sorted(v for pc in components(f) for v in pc.vertices)
    assert seen == list(range(10))

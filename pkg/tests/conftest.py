import random

import pytest
from hypothesis import strategies as st

from fgc.funcgraph import Endofunction


@st.composite
def endofunctions(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return Endofunction(tuple(draw(st.lists(st.integers(0, max(n - 1, 0)), min_size=n, max_size=n)) if n else ()))


@st.composite
def permutations_of(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return Endofunction(tuple(draw(st.permutations(range(n)))))


@st.composite
def rooted_tree_functions(draw, min_size=1, max_size=7):
    """A random rooted tree as an endofunction: vertex 0 is a fixed point, every
    other vertex points at a smaller one, then labels are shuffled."""
    size = draw(st.integers(min_size, max_size))
    parents = [0] + [draw(st.integers(0, v - 1)) for v in range(1, size)]
    perm = draw(st.permutations(range(size)))
    images = [0] * size
    for v, p in enumerate(parents):
        images[perm[v]] = perm[p]
    return Endofunction(tuple(images)), perm[0]


@pytest.fixture
def rng():
    return random.Random(20261017)

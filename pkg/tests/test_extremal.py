import pytest

from fgc.canonical import class_key
from fgc.centralizer import count_bij_centralizer
from fgc.errors import BadParams, BoundExceeded, InfeasibleM
from fgc.extremal import (
    U,
    W,
    FamilySpec,
    Z,
    construct,
    fig6_value,
    fixed_cycles_max_formula,
    functions_with_cycles,
    is_rigid_by_conditions,
    max_centralizer_fixed_cycles,
    min_bij_centralizer_rigidity,
    min_centralizer,
    rows_to_csv,
    search_rows,
    union,
    w_centralizer_size,
)
from fgc.funcgraph import identity


def key(spec):
    return class_key(construct(spec))


def test_construct():
    assert construct(Z(4)).images == (1, 2, 3, 0)
    assert construct(W(2, 3)).images == (1, 0, 0, 0, 0)
    assert construct(U(4, 4)).images == (1, 2, 3, 0, 0, 4, 5, 6)
    assert construct(union(Z(1), Z(2))).images == (0, 2, 1)
    assert str(union(W(2, 3), Z(2))) == "W:2,3+Z:2"
    with pytest.raises(BadParams):
        construct(Z(0))
    with pytest.raises(BadParams):
        construct(FamilySpec("Q", (1,)))


def test_min_centralizer_n5():
    assert min_centralizer(5, "Cbij_over_bij") == (4, frozenset({key(union(Z(1), Z(4)))}))
    assert min_centralizer(5, "C_over_bij") == (5, frozenset({key(Z(5)), key(union(Z(1), Z(4)))}))
    value, keys = min_centralizer(5, "C_over_all")
    expected = {key(U(m, 5 - m)) for m in range(1, 6)} | {key(union(Z(1), U(m, 4 - m))) for m in range(2, 5)}
    assert value == 5 and keys == expected
    with pytest.raises(BadParams):
        min_centralizer(3, "nope")
    with pytest.raises(BoundExceeded):
        min_centralizer(9, "C_over_all")


def test_rigidity():
    keys = min_bij_centralizer_rigidity(3)
    assert key(U(2, 1)) in keys
    assert class_key(identity(3)) not in keys
    assert key(union(Z(1), Z(1), Z(1))) not in keys
    assert not is_rigid_by_conditions(identity(2))
    assert is_rigid_by_conditions(construct(U(2, 1)))


def test_rigid_conditions_match_counts():
    from fgc.extremal import all_endofunctions

    for n in range(1, 5):
        for f in all_endofunctions(n):
            assert is_rigid_by_conditions(f) == (count_bij_centralizer(f) == 1)


def test_max_fixed_cycles():
    assert max_centralizer_fixed_cycles(5, [2]) == (65, frozenset({key(W(2, 3))}))
    assert max_centralizer_fixed_cycles(4, [4]) == (4, frozenset({key(Z(4))}))
    assert max_centralizer_fixed_cycles(4, [1]) == (64, frozenset({key(W(1, 3))}))
    assert w_centralizer_size(2, 3) == 65
    with pytest.raises(InfeasibleM):
        max_centralizer_fixed_cycles(3, [2, 2])


def test_functions_with_cycles_exact():
    from fgc.decompose import components

    for f in functions_with_cycles(5, [1, 2]):
        assert sorted(len(pc.cycle) for pc in components(f)) == [1, 2]


def test_fig6():
    chk = fig6_value()
    assert chk.row_sums == (67, 4, 8)
    assert chk.total == 2144 == chk.oracle_total == chk.formula_value
    assert chk.matches_oracle and not chk.matches_claim
    assert "1072" in chk.describe()
    assert fixed_cycles_max_formula([2, 2, 4], 3) == 2144


def test_search_rows_csv():
    rows = search_rows(3, "C_over_bij")
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == "class_key,count,is_extremal"
    assert sum(e for _, _, e in rows) == 2
    max_rows = search_rows(5, "max", [2])
    assert [(k, c) for k, c, e in max_rows if e] == [(key(W(2, 3)), 65)]
    with pytest.raises(BadParams):
        search_rows(4, "max")

from fractions import Fraction

import pytest

from dr2calc.linalg import (
    InconsistentSystemError,
    UnderdeterminedSystemError,
    rank,
    reduced_echelon,
    row_dependencies,
    solve_unique,
)

F = Fraction


def test_rank_basic():
    assert rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rank([]) == 0
    assert rank([[F(0), F(0)]]) == 0


def test_solve_unique_square():
    sol = solve_unique([[F(2), F(1)], [F(1), F(-1)]], [F(5), F(1)])
    assert sol == [F(2), F(1)]


def test_solve_overdetermined_consistent():
    rows = [[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]]
    assert solve_unique(rows, [F(3), F(4), F(7)]) == [F(3), F(4)]


def test_solve_underdetermined():
    with pytest.raises(UnderdeterminedSystemError):
        solve_unique([[F(1), F(1)]], [F(1)])


def test_solve_inconsistent_reports_row():
    rows = [[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]]
    with pytest.raises(InconsistentSystemError) as exc:
        solve_unique(rows, [F(3), F(4), F(8)])
    assert exc.value.row_index == 2


def test_row_dependencies():
    rows = [[F(1), F(0)], [F(0), F(1)], [F(2), F(3)], [F(1), F(1)]]
    deps = row_dependencies(rows)
    assert [i for i, _ in deps] == [2, 3]
    for i, combo in deps:
        recombined = [
            sum(combo[k] * rows[k][c] for k in combo) for c in range(2)
        ]
        assert recombined == rows[i]


def test_row_dependencies_single_row():
    assert row_dependencies([[F(1), F(2), F(3)]]) == []


def test_reduced_echelon_pivot_preference():
    rows = [[F(1), F(1), F(0)], [F(0), F(1), F(1)]]
    entries = reduced_echelon(rows, [2, 1, 0])
    pivots = [col for col, _ in entries]
    assert pivots == [2, 1]
    # fully reduced: each pivot column is zero in the other rows
    for col, row in entries:
        for other_col, other_row in entries:
            if other_col != col:
                assert other_row[col] == 0

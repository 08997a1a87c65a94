from fractions import Fraction

import pytest

from dr2calc.chow import dr2_class
from dr2calc.polyq import D, PolyQ
from dr2calc.solver import (
    InconsistentSystemError,
    ParamSystem,
    UnderdeterminedSystemError,
    full_system,
    redundancy_report,
    solve_parametric,
)
from dr2calc.surfaces import EquationRow, full_system_rows, symmetry_rows

F = Fraction


def _corrupt_row(rows, index, bump):
    rows = list(rows)
    r = rows[index]
    rows[index] = EquationRow(
        coefficients=r.coefficients,
        rhs=r.rhs + bump,
        label=r.label,
        kind=r.kind,
        provenance=r.provenance,
    )
    return tuple(rows)


def test_full_solve_reproduces_closed_form():
    cert = solve_parametric(full_system())
    assert cert.rank == 14
    assert cert.consistent
    assert all(r.is_zero() for r in cert.residuals)
    assert cert.solution == dr2_class(D)
    # six zero slots come out identically zero
    for k in range(8, 14):
        assert cert.solution.coeffs[k].is_zero()


def test_sample_set_independence():
    sys_ = full_system()
    a = solve_parametric(sys_, samples=range(2, 8))
    b = solve_parametric(sys_, samples=range(3, 9))
    assert a.solution == b.solution
    assert a.sample_points != b.sample_points


def test_exactly_two_redundant_rows():
    sys_ = full_system()
    deps = redundancy_report(sys_)
    assert len(deps) == 2
    # each reported combination actually reconstructs the row, rhs included
    for dep in deps:
        row = sys_.rows[dep.index]
        recombined = [F(0)] * 14
        rhs = PolyQ()
        for k, coeff in dep.combination.items():
            src = sys_.rows[k]
            recombined = [
                acc + coeff * c for acc, c in zip(recombined, src.coefficients)
            ]
            rhs = rhs + src.rhs * coeff
        assert tuple(recombined) == row.coefficients
        assert rhs == row.rhs


def test_dropping_a_redundant_row_leaves_solution_unchanged():
    sys_ = full_system()
    baseline = solve_parametric(sys_).solution
    for dep in redundancy_report(sys_):
        rows = tuple(r for k, r in enumerate(sys_.rows) if k != dep.index)
        cert = solve_parametric(ParamSystem(rows=rows))
        assert cert.solution == baseline
        assert cert.consistent


def test_symmetry_rows_alone_is_underdetermined():
    with pytest.raises(UnderdeterminedSystemError):
        solve_parametric(ParamSystem(rows=symmetry_rows()))


def test_single_row_system_has_no_dependencies():
    sys_ = ParamSystem(rows=full_system_rows()[:1])
    assert redundancy_report(sys_) == []


def test_surface_rows_alone_dependencies_match_rank():
    from dr2calc.linalg import rank

    rows = full_system_rows()[:10]
    sys_ = ParamSystem(rows=rows)
    deps = redundancy_report(sys_)
    matrix = [list(r.coefficients) for r in rows]
    assert len(deps) == 10 - rank(matrix)


def test_corrupted_rhs_detected():
    rows = _corrupt_row(full_system_rows(), 0, 1)
    with pytest.raises(InconsistentSystemError) as exc:
        solve_parametric(ParamSystem(rows=rows))
    assert 0 <= exc.value.row_index < 16


def test_corrupted_system_has_no_solution_at_d2():
    # independent oracle: at d = 2 the corrupted augmented matrix has higher
    # rank than the coefficient matrix, so no solution exists at all
    from dr2calc.linalg import rank

    rows = _corrupt_row(full_system_rows(), 0, 1)
    matrix = [list(r.coefficients) for r in rows]
    augmented = [list(r.coefficients) + [r.rhs(2)] for r in rows]
    assert rank(augmented) == rank(matrix) + 1


def test_certificate_serialization():
    cert = solve_parametric(full_system())
    blob = cert.to_json_dict()
    assert blob["rank"] == 14
    assert blob["consistent"] is True
    assert blob["sample_points"] == ["2", "3", "4", "5", "6", "7"]
    assert all(res == [] for res in blob["residuals"])

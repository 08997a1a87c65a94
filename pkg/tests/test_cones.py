import json
import random
from fractions import Fraction

import pytest

from dr2calc.chow import TautClass2, dr2_class
from dr2calc.cones import (
    EffectiveDivisorPattern,
    ci_obstruction,
    cone_decomposition,
    dr_count_two_points,
    dr_infinity,
    load_strata_table,
    nonextremality_check,
    nonpolynomiality_witness,
)
from dr2calc.polyq import D, PolyQ

F = Fraction


def _pattern(rng):
    return EffectiveDivisorPattern(
        *[F(rng.randint(0, 12), rng.randint(1, 6)) for _ in range(6)]
    )


def test_pattern_rejects_negative_coefficients():
    with pytest.raises(ValueError):
        EffectiveDivisorPattern(F(1), F(-1), F(0), F(0), F(0), F(0))


def test_ci_obstruction_examples():
    ones = EffectiveDivisorPattern(F(1), F(1), F(0), F(0), F(0), F(0))
    assert ci_obstruction(ones, ones) == 1
    deltas_only = EffectiveDivisorPattern(F(0), F(0), F(2), F(1), F(3), F(4))
    rng = random.Random(5)
    assert ci_obstruction(deltas_only, _pattern(rng)) == 0


def test_ci_obstruction_closed_form_property():
    rng = random.Random(2024)
    for _ in range(300):
        a, b = _pattern(rng), _pattern(rng)
        got = ci_obstruction(a, b)
        assert got == (a.psi1 * b.psi1 + a.psi2 * b.psi2) / 2
        assert got >= 0


def test_class_fused_slot_is_negative():
    slot = dr2_class(D).coeffs[1]
    assert slot == (D * D - 1) * (2 - D * D) / 4
    for d in range(2, 51):
        assert slot(d) < 0


def test_dr_infinity_slots():
    inf = dr_infinity()
    expected = [
        F(1, 2),
        F(-1, 4),
        F(-3, 20),
        F(-3, 20),
        F(1, 10),
        F(1, 10),
        F(1, 120),
        F(1, 120),
    ] + [F(0)] * 6
    assert [c.constant_value() for c in inf.coeffs] == expected


def test_cone_decomposition_symbolic():
    base, limit = cone_decomposition(D)
    assert base == (D * D - 1) / 3
    assert limit == (D * D - 1) * (D * D - 4)
    # identity slot-wise
    recombined = dr2_class(2).scale(base) + dr_infinity().scale(limit)
    assert recombined == dr2_class(D)


def test_cone_decomposition_values():
    assert cone_decomposition(2) == (PolyQ((1,)), PolyQ())
    base, limit = cone_decomposition(3)
    assert (base, limit) == (PolyQ((F(8, 3),)), PolyQ((40,)))
    for d in range(2, 30):
        b, l = cone_decomposition(d)
        assert b.constant_value() >= 0 and l.constant_value() >= 0


def test_nonextremality_gated_without_table():
    report = nonextremality_check(None)
    assert report.status == "skipped_missing_data"
    assert report.residual is None
    assert all(w > 0 for w in report.weights.values())
    assert sorted(report.weights.values()) == sorted(
        [F(1, 5), F(1, 60), F(2, 5), F(1, 30), F(1, 30), F(1, 360), F(1, 15)]
    )


def test_nonextremality_zero_table_residual():
    zero = TautClass2.zero()
    table = {"d11|": zero, "d01|": zero, "d0|": zero, "d00": zero}
    report = nonextremality_check(table)
    assert report.status == "failed"
    residual = report.residual
    expected = (
        dr_infinity()
        - TautClass2.unit(9).scale(F(1, 5))
        - TautClass2.unit(10).scale(F(1, 60))
        - dr2_class(2).scale(F(1, 15))
    )
    assert residual == expected
    assert not residual.is_zero()
    assert residual.coeffs[0] == F(1, 10)  # psi1psi2 slot
    assert residual.coeffs[9] == F(-1, 5)  # d12d2 slot


def test_strata_table_loading(tmp_path):
    zero_row = ["0"] * 14
    doc = {"d11|": zero_row, "d01|": zero_row, "d0|": zero_row, "d00": zero_row}
    path = tmp_path / "strata.json"
    path.write_text(json.dumps(doc))
    table = load_strata_table(str(path))
    assert set(table) == {"d11|", "d01|", "d0|", "d00"}
    assert all(v.is_zero() for v in table.values())

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"d11|": ["0"] * 13}))
    with pytest.raises(ValueError):
        load_strata_table(str(bad))
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"d11|": zero_row}))
    with pytest.raises(ValueError):
        load_strata_table(str(missing))


def test_fiber_counts():
    assert dr_count_two_points(3) == 16
    assert dr_count_two_points(0) == 0
    assert dr_count_two_points(1) == 0
    assert dr_count_two_points(-2) == 6


def test_nonpolynomiality_witness():
    report = nonpolynomiality_witness(4)
    assert report.sample_points == (1, 2, 3, 4, 5)
    assert report.interpolant == 2 * (D * D - 1)
    assert report.value_at_zero == -2
    assert report.count_at_zero == 0
    assert report.witnesses_nonpolynomiality
    # the interpolant does agree at the nonzero samples, e.g. at 1
    assert report.interpolant(1) == dr_count_two_points(1)


def test_nonpolynomiality_degree_edge_cases():
    # degree <= 1: two samples force the line through (1,0), (2,6)
    report = nonpolynomiality_witness(1)
    assert report.value_at_zero == -6
    assert report.witnesses_nonpolynomiality
    # degree 0: the single sample (1, 0) yields the zero constant, which
    # happens to agree at 0; no witness at this degree
    report = nonpolynomiality_witness(0)
    assert report.polynomial_matches
    with pytest.raises(ValueError):
        nonpolynomiality_witness(-1)

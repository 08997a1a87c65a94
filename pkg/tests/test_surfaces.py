import random
from fractions import Fraction

import pytest

from dr2calc.chow import RELATIONS, TautClass2, dr2_class, swap_markings
from dr2calc.polyq import D
from dr2calc.surfaces import (
    DISPLAYED_INTERSECTIONS,
    SurfaceModel,
    builtin_surfaces,
    equation_row,
    fixture_checksums,
    full_system_rows,
    pushforward_rows,
    symmetry_rows,
)

F = Fraction

SURFACES = {s.family: s for s in builtin_surfaces()}

# slot permutation induced by swapping the marked points
SWAP = (0, 1, 3, 2, 5, 4, 7, 6, 8, 9, 10, 11, 12, 13)


def test_ten_surfaces_load():
    assert sorted(SURFACES) == list(range(1, 11))
    for s in SURFACES.values():
        assert len(s.gram) == len(s.generators)


@pytest.mark.parametrize("family,gen_a,gen_b,expected", DISPLAYED_INTERSECTIONS)
def test_golden_intersection_numbers(family, gen_a, gen_b, expected):
    assert SURFACES[family].pair_generators(gen_a, gen_b) == expected


def test_absent_generator_restricts_to_zero():
    s = SURFACES[3]
    assert all(x == 0 for x in s.restriction("psi1"))
    with pytest.raises(KeyError):
        s.restriction("nonsense")


def test_relations_pair_to_zero_on_every_surface():
    # the surface functionals are well-defined on the quotient
    for s in SURFACES.values():
        for rel in RELATIONS:
            total = F(0)
            for (i, j), coeff in rel.items():
                from dr2calc.chow import GENERATORS

                total += coeff.constant_value() * s.pair_generators(
                    GENERATORS[i], GENERATORS[j]
                )
            assert total == 0, (s.family, rel)


def test_equation_rows_frozen():
    row1 = equation_row(SURFACES[1])
    expected1 = {0: F(6), 1: F(4), 8: F(-2)}
    for k, c in enumerate(row1.coefficients):
        assert c == expected1.get(k, F(0))
    assert row1.rhs == 2 * (D**4 - 1)

    row3 = equation_row(SURFACES[3])
    expected3 = {13: F(288), 12: F(-24)}
    for k, c in enumerate(row3.coefficients):
        assert c == expected3.get(k, F(0))
    assert row3.rhs.is_zero()

    row9 = equation_row(SURFACES[9])
    expected9 = {4: F(-1), 5: F(-1), 6: F(12), 7: F(12)}
    for k, c in enumerate(row9.coefficients):
        assert c == expected9.get(k, F(0))
    assert row9.rhs.is_zero()

    row2 = equation_row(SURFACES[2])
    expected2 = {0: F(1), 2: F(-1), 3: F(-1), 4: F(1), 5: F(1)}
    for k, c in enumerate(row2.coefficients):
        assert c == expected2.get(k, F(0))
    assert row2.rhs == (D * D - 1) ** 2


def test_asymmetric_gram_rejected():
    s = SURFACES[1]
    bad = SurfaceModel(
        name="broken",
        family=99,
        generators=s.generators,
        gram=((F(0), F(1), F(1)), (F(2), F(0), F(1)), (F(1), F(1), F(-2))),
        restrictions=s.restrictions,
        rhs=s.rhs,
        rationale="",
    )
    with pytest.raises(ValueError):
        equation_row(bad)


def test_symmetry_rows():
    rows = symmetry_rows()
    assert len(rows) == 3
    slots = [(2, 3), (4, 5), (6, 7)]
    for row, (a, b) in zip(rows, slots):
        for k, c in enumerate(row.coefficients):
            expected = F(1) if k == a else F(-1) if k == b else F(0)
            assert c == expected
        assert row.rhs.is_zero()


def test_pushforward_rows_frozen():
    rows = pushforward_rows()
    psi_row, d0_row, d1_row = rows
    assert psi_row.coefficients == (
        F(3), F(2), F(0), F(0), F(0), F(0), F(0), F(0), F(-1),
        F(0), F(0), F(0), F(0), F(0),
    )
    assert psi_row.rhs == D**4 - 1
    assert d0_row.coefficients == (
        F(0), F(1, 5), F(0), F(0), F(0), F(0), F(3), F(1), F(0),
        F(0), F(1), F(0), F(0), F(0),
    )
    assert d0_row.rhs == -(D * D - 1) * (D * D + 6) / 60
    assert d1_row.coefficients == (
        F(0), F(7, 5), F(1), F(0), F(2), F(1), F(0), F(0), F(0),
        F(1), F(0), F(0), F(0), F(0),
    )
    assert d1_row.rhs == -(D * D - 1) * (D * D + 6) / 5


def test_every_row_vanishes_on_the_class():
    c = dr2_class(D)
    rows = full_system_rows()
    assert len(rows) == 16
    for row in rows:
        assert row.residual(c).is_zero(), row.label


def test_symmetric_families_have_swap_invariant_rows():
    for family in (1, 2, 3, 9):
        row = equation_row(SURFACES[family])
        swapped = tuple(row.coefficients[k] for k in SWAP)
        assert swapped == row.coefficients


def test_row_functional_respects_swap_on_symmetric_families():
    rng = random.Random(88)
    for family in (1, 2, 3, 9):
        row = equation_row(SURFACES[family])
        for _ in range(5):
            c = TautClass2(
                [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(14)]
            )
            assert row.apply(swap_markings(c)) == row.apply(c)


def test_fixture_checksums_shape():
    sums = fixture_checksums()
    assert len(sums) == 10
    assert all(len(v) == 64 for v in sums.values())

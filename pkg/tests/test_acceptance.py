"""Acceptance suite: one test per headline claim, all at exact equality.

Every tolerance is literal equality of rationals or of polynomial
coefficient vectors; nothing is sampled where an identity is claimed.
Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.
"""

import random
from fractions import Fraction

from dr2calc.chow import (
    RELATIONS,
    TautClass2,
    dr2_class,
    reduce_to_basis,
    swap_markings,
)
from dr2calc.cones import (
    EffectiveDivisorPattern,
    ci_obstruction,
    cone_decomposition,
    dr_count_two_points,
    dr_infinity,
    nonpolynomiality_witness,
)
from dr2calc.ct import (
    CT_RELATIONS,
    CtClass,
    derive_decorated_rows,
    reduce_ct,
    verify_hac,
)
from dr2calc.m21 import (
    WEIERSTRASS_CLASS,
    DivisorM21,
    chi_pullback_pipeline,
    pencil_count,
    psi_cubed_intersection,
    pushforward,
    pushforward_class_formula,
)
from dr2calc.polyq import D, PolyQ, poly_interpolate
from dr2calc.solver import full_system, redundancy_report, solve_parametric
from dr2calc.surfaces import DISPLAYED_INTERSECTIONS, builtin_surfaces

F = Fraction


def _report(num, text):
    print(f"ACCEPTANCE {num:2d} PASS: {text}")


def test_criterion_01_class_formula_from_linear_system():
    cert = solve_parametric(full_system())
    assert cert.rank == 14
    assert cert.consistent
    assert cert.solution == dr2_class(D)
    for k in range(8, 14):
        assert cert.solution.coeffs[k].is_zero()
    assert len(redundancy_report(full_system())) == 2
    _report(1, "16-row solve returns the closed-form class, rank 14, 2 redundancies")


def test_criterion_02_surface_golden_numbers():
    surfaces = {s.family: s for s in builtin_surfaces()}
    for fam, a, b, want in DISPLAYED_INTERSECTIONS:
        assert surfaces[fam].pair_generators(a, b) == want, (fam, a, b)
    _report(2, f"all {len(DISPLAYED_INTERSECTIONS)} displayed intersection numbers exact")


def test_criterion_03_pushforward_closed_form():
    d2 = D * D
    f = d2 - 1
    tail = f * (d2 + 6) / 5
    target = DivisorM21((f * (d2 + 1), -tail / 12, -tail))
    c = dr2_class(D)
    assert pushforward(c, 1) == target
    assert pushforward(c, 2) == target
    assert pushforward_class_formula(2) == WEIERSTRASS_CLASS.scale(5)
    _report(3, "push-forward matches the closed form symbolically; 5W at d=2")


def test_criterion_04_diaz_pipeline():
    assert chi_pullback_pipeline(D) == pushforward_class_formula(D)
    assert chi_pullback_pipeline(2) == WEIERSTRASS_CLASS.scale(5)
    _report(4, "Diaz pull-back pipeline equals the push-forward class in d")


def test_criterion_05_psi_cubed_pairing():
    got = psi_cubed_intersection(D)
    assert got == (D * D - 1) * (3 * D * D - 7) / 5760
    assert got(2) == F(1, 384)
    _report(5, "psi^3 pairing is (d^2-1)(3d^2-7)/5760, value 1/384 at d=2")


def test_criterion_06_compact_type_comparison():
    rows = derive_decorated_rows()
    assert rows.d22 == CtClass((0, 0, 0, -1, 0))
    assert rows.d11bar == CtClass((F(-1, 4), F(1, 4), F(1, 4), 0, F(-1, 2)))
    report = verify_hac()
    assert report.ok
    _report(6, "Hain-class comparison holds with the derived decorated classes")


def test_criterion_07_complete_intersection_obstruction():
    rng = random.Random(424242)
    for _ in range(1000):
        a = EffectiveDivisorPattern(
            *[F(rng.randint(0, 12), rng.randint(1, 6)) for _ in range(6)]
        )
        b = EffectiveDivisorPattern(
            *[F(rng.randint(0, 12), rng.randint(1, 6)) for _ in range(6)]
        )
        got = ci_obstruction(a, b)
        assert got == (a.psi1 * b.psi1 + a.psi2 * b.psi2) / 2
        assert got >= 0
    slot = dr2_class(D).coeffs[1]
    assert slot == (D * D - 1) * (2 - D * D) / 4
    for d in range(2, 51):
        assert slot(d) < 0
    _report(7, "1000 effective products non-negative; class fused slot < 0 for d=2..50")


def test_criterion_08_two_ray_cone_decomposition():
    base, limit = cone_decomposition(D)
    assert dr2_class(2).scale(base) + dr_infinity().scale(limit) == dr2_class(D)
    expected = [
        F(1, 2), F(-1, 4), F(-3, 20), F(-3, 20),
        F(1, 10), F(1, 10), F(1, 120), F(1, 120),
    ] + [F(0)] * 6
    assert [c.constant_value() for c in dr_infinity().coeffs] == expected
    _report(8, "two-ray decomposition exact slot-wise; limit class matches display")


def test_criterion_09_pencil_count_identity():
    for g in range(1, 101):
        assert g * (g + 1) * (g + 2) == ((g + 1) ** 2 - 1) + pencil_count(g)
    _report(9, "splitting identity g(g+1)(g+2) = ((g+1)^2-1) + (g+2)g^2 for g=1..100")


def test_criterion_10_nonpolynomiality():
    interpolant = poly_interpolate(
        (m, dr_count_two_points(m)) for m in range(1, 6)
    )
    assert interpolant == 2 * (D * D - 1)
    assert interpolant(0) == -2
    assert dr_count_two_points(0) == 0
    assert nonpolynomiality_witness(4).witnesses_nonpolynomiality
    _report(10, "interpolant through m=1..5 gives -2 at 0 against the true count 0")


def test_criterion_11_property_suite():
    # relation ideals reduce to zero in both rings
    for rel in RELATIONS:
        assert reduce_to_basis(rel).is_zero()
    for rel in CT_RELATIONS:
        assert reduce_ct(rel).is_zero()
    # idempotence and linearity of reduction
    rng = random.Random(9001)
    from dr2calc.chow import BASIS_MONOMIALS, MONOMIALS

    for _ in range(25):
        c = TautClass2([F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(14)])
        expr = {}
        for slot, monomials in enumerate(BASIS_MONOMIALS):
            for m in monomials:
                expr[m] = expr.get(m, PolyQ()) + c.coeffs[slot]
        assert reduce_to_basis(expr) == c
    for _ in range(25):
        x = {m: F(rng.randint(-6, 6), rng.randint(1, 4)) for m in rng.sample(MONOMIALS, 6)}
        y = {m: F(rng.randint(-6, 6), rng.randint(1, 4)) for m in rng.sample(MONOMIALS, 6)}
        a = F(rng.randint(-5, 5), rng.randint(1, 3))
        combo = {}
        for m, v in x.items():
            combo[m] = combo.get(m, F(0)) + a * v
        for m, v in y.items():
            combo[m] = combo.get(m, F(0)) + v
        assert reduce_to_basis(combo) == reduce_to_basis(x).scale(a) + reduce_to_basis(y)
    # marking-swap invariance of the class
    assert swap_markings(dr2_class(D)) == dr2_class(D)
    # sample-set independence of the parametric solver
    sys_ = full_system()
    assert (
        solve_parametric(sys_, samples=range(2, 8)).solution
        == solve_parametric(sys_, samples=range(3, 9)).solution
    )
    _report(11, "relation reduction, idempotence, linearity, swap, sample independence")

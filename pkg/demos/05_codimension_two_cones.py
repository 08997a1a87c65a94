"""Cone geometry in codimension two, and a non-polynomiality witness.

Three stories.  First: the degree-d class is never a product of two
effective divisor classes, because any such product has a non-negative
coefficient on psi1^2 + psi2^2 while the class has (d^2-1)(2-d^2)/4 < 0.
Second: normalizing by d^4 and letting d grow gives a limit class, and
every member of the family is a non-negative combination of the degree-2
class and the limit class, a two-dimensional cone.  Third: with three or
more markings the analogous fiber count, 2(m^2-1) for m nonzero but 0 at
m = 0, cannot be matched by any single polynomial in m.
"""

import random
from fractions import Fraction

from dr2calc import (
    D,
    EffectiveDivisorPattern,
    ci_obstruction,
    cone_decomposition,
    dr2_class,
    dr_infinity,
    nonextremality_check,
    nonpolynomiality_witness,
)

print("-- complete-intersection obstruction --")
rng = random.Random(1)
a = EffectiveDivisorPattern(*[Fraction(rng.randint(0, 5)) for _ in range(6)])
b = EffectiveDivisorPattern(*[Fraction(rng.randint(0, 5)) for _ in range(6)])
print("two random effective divisor patterns:")
print("  a =", a)
print("  b =", b)
print("  fused-slot coefficient of a*b:", ci_obstruction(a, b), "(always >= 0)")
slot = dr2_class(D).coeffs[1]
print("fused slot of the degree-d class:", slot)
print("values at d = 2..6:", [str(slot(d)) for d in range(2, 7)], "(all negative)")

print()
print("-- the two-dimensional cone --")
print("limit class (slot-wise d^4-leading coefficients):")
print(" ", dr_infinity())
base, limit = cone_decomposition(D)
print("decomposition coefficients on (degree-2 ray, limit ray):")
print(f"  ({base},  {limit})")
for d in (2, 3, 5):
    b_, l_ = cone_decomposition(d)
    print(f"  at d = {d}: ({b_}, {l_})")

print()
print("-- non-extremality, gated on external strata data --")
report = nonextremality_check()
print("status without a strata table:", report.status)
print("decomposition weights (all positive):",
      {k: str(v) for k, v in report.weights.items()})

print()
print("-- non-polynomiality with three or more markings --")
witness = nonpolynomiality_witness(4)
print("fiber counts at m = 1..5:",
      [witness.interpolant(m) for m in witness.sample_points])
print("unique interpolant:", witness.interpolant)
print("its value at m = 0:", witness.value_at_zero,
      "but the true count is", witness.count_at_zero)
print("so no polynomial of degree <= 4 matches:", witness.witnesses_nonpolynomiality)

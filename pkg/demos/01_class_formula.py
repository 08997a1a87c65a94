"""The degree-d class, symbolically and at small degrees.

The headline computation: the class of the closure of the locus of 2-pointed
genus-2 curves admitting a degree-d cover of the line totally ramified at
both marked points, expressed in the 14-element product basis of the
degree-2 tautological group.
"""

from dr2calc import BASIS_NAMES, D, dr2_class, swap_markings

symbolic = dr2_class(D)

print("Symbolic class (coefficients are polynomials in d):")
for name, coeff in zip(BASIS_NAMES, symbolic.coeffs):
    print(f"  {name:<14} {coeff}")

print()
print("Every slot carries the factor d^2 - 1, so the class vanishes at d = 1:")
print("  dr2_class(1) is zero:", dr2_class(1).is_zero())

print()
print("Marking symmetry: swapping the two points fixes the class:")
print("  swap_markings(class) == class:", swap_markings(symbolic) == symbolic)

print()
print("Values at small degrees (exact rationals):")
for d in (2, 3, 4, 5):
    values = [str(c.constant_value()) for c in dr2_class(d).coeffs]
    nonzero = {
        name: v for name, v in zip(BASIS_NAMES, values) if v != "0"
    }
    print(f"  d = {d}: {nonzero}")

"""Forgetting a marked point: divisor classes and Rulla's cones.

Pushing the degree-d class down to the 1-pointed space gives a divisor with
a clean closed form.  At d = 2 it is five times the pointed Weierstrass
divisor, an extremal and rigid ray of the pseudo-effective cone; for d >= 3
it moves into the interior (big), sitting on the boundary of the moving
cone (at d = 3, exactly on the ray of Rulla's generator D = 30(W + psi)).
"""

from dr2calc import (
    D,
    WEIERSTRASS_CLASS,
    chi_pullback_pipeline,
    classify_effective_cone,
    diaz_divisor,
    dr2_class,
    pencil_count,
    psi_cubed_intersection,
    pushforward,
    pushforward_class_formula,
)

symbolic = pushforward_class_formula(D)
print("Push-forward of the degree-d class (both markings give the same):")
print(" ", symbolic)
print("  equals pushforward(class, 1):", pushforward(dr2_class(D), 1) == symbolic)
print("  equals pushforward(class, 2):", pushforward(dr2_class(D), 2) == symbolic)

print()
print("At d = 2 this is 5 times the Weierstrass divisor:")
print("  5W =", WEIERSTRASS_CLASS.scale(5))
print("  match:", pushforward_class_formula(2) == WEIERSTRASS_CLASS.scale(5))

print()
print("An independent route: pull back the Diaz divisor of genus d+1 along")
print("the boundary attachment map, correct by (d+1)(d-1)^2 W.  For example")
print("the genus-3 Diaz divisor is",
      f"{diaz_divisor(3).lambda_coeff} lambda "
      f"+ ({diaz_divisor(3).delta0_coeff}) delta_0 "
      f"+ ({diaz_divisor(3).delta_coeffs[1]}) delta_1;")
print("the pipeline agrees with the closed form symbolically:",
      chi_pullback_pipeline(D) == symbolic)
print("(the count (g+2)g^2 of marked pencils feeds the genus-splitting step:",
      f"pencil_count(3) = {pencil_count(3)})")

print()
print("Sanity pairing against psi^3 (top intersection numbers of the")
print("1-pointed genus-2 space):", psi_cubed_intersection(D),
      "=", "(d^2-1)(3d^2-7)/5760")
print("value at d = 2:", psi_cubed_intersection(D)(2))

print()
print("Cone positions (coordinates in the effective generators (W, d0, d1)):")
for d in (2, 3, 4, 5, 6):
    report = classify_effective_cone(pushforward_class_formula(d))
    coords = tuple(str(x) for x in report.effective_coords)
    extra = ""
    if report.w_psi_coords is not None:
        w, psi = report.w_psi_coords
        extra = f"; in span(W, psi): {w} W + {psi} psi"
        if report.in_moving_d_psi_cone:
            extra += " (inside cone(D, psi))"
    print(f"  d = {d}: {coords} -> {report.classification}{extra}")

"""Exact calculator for degree-d double-ramification cycle classes on the
moduli space of 2-pointed genus-2 stable curves, with all arithmetic over
the rationals.

The headline object is ``dr2_class(d)``: the class, in the degree-2
tautological group, of the closure of the locus of smooth 2-pointed genus-2
curves carrying a degree-d map to the line totally ramified at both marked
points.  Everything else either derives it (test-surface equations and the
parametric solver), pushes it around (to the 1-pointed space, to the
compact-type locus), or locates it inside effective cones.
"""

__version__ = "0.1.0"

from .chow import (
    BASIS_NAMES,
    DivisorM22,
    TautClass2,
    dr2_class,
    multiply_divisors,
    reduce_to_basis,
    swap_markings,
)
from .cones import (
    EffectiveDivisorPattern,
    ci_obstruction,
    cone_decomposition,
    dr_infinity,
    nonextremality_check,
    nonpolynomiality_witness,
)
from .ct import CtClass, derive_decorated_rows, hain_class, restrict_to_ct, verify_hac
from .m21 import (
    DivisorM21,
    WEIERSTRASS_CLASS,
    chi_pullback_pipeline,
    classify_effective_cone,
    diaz_divisor,
    pencil_count,
    psi_cubed_intersection,
    pushforward,
    pushforward_class_formula,
)
from .polyq import D, PolyQ, Rational, poly_eval, poly_interpolate
from .solver import ParamSystem, SolveCertificate, full_system, redundancy_report, solve_parametric
from .surfaces import SurfaceModel, builtin_surfaces, equation_row, full_system_rows

__all__ = [
    "BASIS_NAMES",
    "D",
    "DivisorM21",
    "DivisorM22",
    "CtClass",
    "EffectiveDivisorPattern",
    "ParamSystem",
    "PolyQ",
    "Rational",
    "SolveCertificate",
    "SurfaceModel",
    "TautClass2",
    "WEIERSTRASS_CLASS",
    "builtin_surfaces",
    "chi_pullback_pipeline",
    "ci_obstruction",
    "classify_effective_cone",
    "cone_decomposition",
    "derive_decorated_rows",
    "diaz_divisor",
    "dr2_class",
    "dr_infinity",
    "equation_row",
    "full_system",
    "full_system_rows",
    "hain_class",
    "multiply_divisors",
    "nonextremality_check",
    "nonpolynomiality_witness",
    "pencil_count",
    "poly_eval",
    "poly_interpolate",
    "psi_cubed_intersection",
    "pushforward",
    "pushforward_class_formula",
    "redundancy_report",
    "reduce_to_basis",
    "restrict_to_ct",
    "solve_parametric",
    "swap_markings",
    "verify_hac",
]

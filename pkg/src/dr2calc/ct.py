"""The degree-2 group of the compact-type locus and the Hain-class comparison.

On curves of compact type the irreducible nodal divisor d0 vanishes, and the
degree-2 group of products of the remaining divisor classes collapses to
dimension 5.  We use the marking-symmetric basis

    (psi1+psi2)*d11,  psi1*d12,  psi2*d12,  d2^2,  d12*d2.

The reducing relations are the restrictions of the seven full-space
relations (with d0 set to zero) together with four relations that only hold
on compact type:

    psi1*psi2 = (3/2)(psi1^2+psi2^2) - (9/10)(psi1+psi2) d11
                                     - (2/5)(psi1+psi2) d12
    psi_i^2   = (7/10)(psi_i (d11+d12) - d12*d2) - d2^2     (i = 1, 2)
    (psi1-psi2) d11 = (psi1-psi2) d12

As in the full ring, an echelon form of the relations with pivots forced
onto the ten non-basis coordinates is precomputed once; reductions are then
table lookups.

The pull-back of the zero section of the universal Jacobian along the
section [C, p1, p2] -> O_C(d p1 - d p2) is half the square of an explicit
divisor (Hain's formula):

    (1/2) ( (d^2/2)((psi1-d2) + (psi2-d2)) + d^2 d2 - (d^2/2) d11 )^2 .

Comparing it with the restriction of the degree-d class determines the
decorated boundary classes d22 (push-forward of the psi class from the
1-pointed genus-2 space to the rational-tail divisor) and d11| (two elliptic
tails on a rational component carrying both markings), and verifies that the
difference of the two classes is

    d22 + (2d^2-1) d11| + (d^2 - 6/5) d12*d2,

supported on curves with a rational component containing both markings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .chow import (
    BASIS_MONOMIALS,
    D0,
    D2,
    D11,
    D12,
    PSI1,
    PSI2,
    RELATIONS,
    Expr,
    Monomial,
    MONOMIALS,
    TautClass2,
    expand_product,
    mono,
)
from .linalg import reduced_echelon
from .polyq import PolyLike, PolyQ, Scalar, as_poly

CT_BASIS_NAMES = (
    "(psi1+psi2)d11",
    "psi1d12",
    "psi2d12",
    "d2sq",
    "d12d2",
)


class CtClass:
    """A degree-2 class on the compact-type locus: 5 polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PolyLike]):
        cs = tuple(as_poly(c) for c in coeffs)
        if len(cs) != 5:
            raise ValueError(f"expected 5 coefficients, got {len(cs)}")
        self.coeffs: Tuple[PolyQ, ...] = cs

    @classmethod
    def zero(cls) -> "CtClass":
        return cls((PolyQ(),) * 5)

    @classmethod
    def unit(cls, slot: int) -> "CtClass":
        cs = [PolyQ()] * 5
        cs[slot] = PolyQ((1,))
        return cls(cs)

    def __add__(self, other: "CtClass") -> "CtClass":
        return CtClass(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "CtClass") -> "CtClass":
        return CtClass(a - b for a, b in zip(self.coeffs, other.coeffs))

    def scale(self, factor: PolyLike) -> "CtClass":
        f = as_poly(factor)
        return CtClass(f * c for c in self.coeffs)

    def eval_at(self, x: Scalar) -> "CtClass":
        return CtClass(PolyQ.const(c(x)) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CtClass):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json_dict(self) -> Dict[str, list]:
        return {n: c.to_strings() for n, c in zip(CT_BASIS_NAMES, self.coeffs)}

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{n}: {c}" for n, c in zip(CT_BASIS_NAMES, self.coeffs) if c
        )
        return f"CtClass({terms or '0'})"


def _unit6(index: int) -> Tuple[int, ...]:
    v = [0] * 6
    v[index] = 1
    return tuple(v)


def _drop_d0(expr: Expr) -> Expr:
    return {m: c for m, c in expr.items() if D0 not in m}


def _build_ct_relations() -> Tuple[Expr, ...]:
    half = Fraction(1, 2)
    psi1, psi2 = _unit6(PSI1), _unit6(PSI2)
    d2, d11, d12 = _unit6(D2), _unit6(D11), _unit6(D12)
    restricted = tuple(
        _drop_d0(rel) for rel in RELATIONS
    )
    # psi1 psi2 - (3/2)(psi1^2 + psi2^2) + (9/10)(psi1+psi2) d11
    #           + (2/5)(psi1+psi2) d12 = 0
    psi_sum = (1, 1, 0, 0, 0, 0)
    rel_cross: Expr = {}
    for part, weight in (
        (expand_product(psi1, psi2), Fraction(1)),
        (expand_product(psi1, psi1), Fraction(-3, 2)),
        (expand_product(psi2, psi2), Fraction(-3, 2)),
        (expand_product(psi_sum, _unit6(D11)), Fraction(9, 10)),
        (expand_product(psi_sum, _unit6(D12)), Fraction(2, 5)),
    ):
        for m, c in part.items():
            rel_cross[m] = rel_cross.get(m, PolyQ()) + c * weight
    # psi_i^2 - (7/10) psi_i (d11 + d12) + (7/10) d12 d2 + d2^2 = 0
    def rel_square(i) -> Expr:
        psi_i = _unit6(i)
        out: Expr = {}
        for part, weight in (
            (expand_product(psi_i, psi_i), Fraction(1)),
            (expand_product(psi_i, _unit6(D11)), Fraction(-7, 10)),
            (expand_product(psi_i, _unit6(D12)), Fraction(-7, 10)),
            (expand_product(_unit6(D12), d2), Fraction(7, 10)),
            (expand_product(d2, d2), Fraction(1)),
        ):
            for m, c in part.items():
                out[m] = out.get(m, PolyQ()) + c * weight
        return out

    # (psi1 - psi2)(d11 - d12) = 0
    psi_diff = (1, -1, 0, 0, 0, 0)
    d11_minus_d12 = (0, 0, 0, 0, 1, -1)
    rel_swap = expand_product(psi_diff, d11_minus_d12)
    return restricted + (rel_cross, rel_square(PSI1), rel_square(PSI2), rel_swap)


#: The eleven compact-type relation expressions (rank 10).
CT_RELATIONS: Tuple[Expr, ...] = _build_ct_relations()

# Coordinates: the 15 monomials avoiding d0, with (psi1*d11, psi2*d11)
# traded for the symmetric/antisymmetric pair (u, v).
_M_P1D11 = mono(PSI1, D11)
_M_P2D11 = mono(PSI2, D11)
_U_COORD = "u"
_V_COORD = "v"

_CT_MONOMIALS = tuple(m for m in MONOMIALS if D0 not in m)
_CT_COORDS: Tuple[object, ...] = (_U_COORD, _V_COORD) + tuple(
    m for m in _CT_MONOMIALS if m not in (_M_P1D11, _M_P2D11)
)
_CT_INDEX = {c: k for k, c in enumerate(_CT_COORDS)}

_CT_BASIS_COORDS = (
    _U_COORD,
    mono(PSI1, D12),
    mono(PSI2, D12),
    mono(D2, D2),
    mono(D12, D2),
)
_CT_NONBASIS = tuple(c for c in _CT_COORDS if c not in _CT_BASIS_COORDS)
_CT_SLOT = {c: k for k, c in enumerate(_CT_BASIS_COORDS)}


def _ct_expr_to_coords(expr: Mapping[Monomial, Fraction]) -> list:
    vec = [Fraction(0)] * len(_CT_COORDS)
    for m, c in expr.items():
        if D0 in m:
            continue  # d0 vanishes on compact type
        c = Fraction(c)
        if m == _M_P1D11:
            vec[_CT_INDEX[_U_COORD]] += c / 2
            vec[_CT_INDEX[_V_COORD]] += c / 2
        elif m == _M_P2D11:
            vec[_CT_INDEX[_U_COORD]] += c / 2
            vec[_CT_INDEX[_V_COORD]] -= c / 2
        else:
            vec[_CT_INDEX[m]] += c
    return vec


def _build_ct_rewrite() -> Dict[object, Tuple[Fraction, ...]]:
    rows = []
    for rel in CT_RELATIONS:
        rows.append(
            _ct_expr_to_coords({m: c.constant_value() for m, c in rel.items()})
        )
    order = [_CT_INDEX[c] for c in _CT_NONBASIS] + [
        _CT_INDEX[c] for c in _CT_BASIS_COORDS
    ]
    entries = reduced_echelon(rows, order)
    if len(entries) != 10:
        raise AssertionError(
            f"compact-type relation span has rank {len(entries)}, expected 10"
        )
    pivot_cols = {col for col, _ in entries}
    if pivot_cols != {_CT_INDEX[c] for c in _CT_NONBASIS}:
        raise AssertionError("compact-type pivots missed a non-basis coordinate")
    rewrite: Dict[object, Tuple[Fraction, ...]] = {}
    for col, row in entries:
        out = [Fraction(0)] * 5
        for k, val in enumerate(row):
            if k == col or val == 0:
                continue
            out[_CT_SLOT[_CT_COORDS[k]]] -= val
        rewrite[_CT_COORDS[col]] = tuple(out)
    return rewrite


_CT_REWRITE = _build_ct_rewrite()


def reduce_ct(expr: Mapping[Monomial, PolyLike]) -> CtClass:
    """Reduce a formal monomial combination to the compact-type 5-basis.

    Monomials involving d0 are killed outright; the rest go through the
    precomputed relation table.  Linear.
    """
    out = [PolyQ()] * 5
    v_coeff = PolyQ()
    for m, raw in expr.items():
        m = mono(*m)
        if D0 in m:
            continue
        c = as_poly(raw)
        if c.is_zero():
            continue
        if m == _M_P1D11:
            out[0] = out[0] + c / 2
            v_coeff = v_coeff + c / 2
        elif m == _M_P2D11:
            out[0] = out[0] + c / 2
            v_coeff = v_coeff - c / 2
        elif m in _CT_SLOT:
            out[_CT_SLOT[m]] = out[_CT_SLOT[m]] + c
        else:
            for slot, val in enumerate(_CT_REWRITE[m]):
                if val != 0:
                    out[slot] = out[slot] + c * val
    if not v_coeff.is_zero():
        for slot, val in enumerate(_CT_REWRITE[_V_COORD]):
            if val != 0:
                out[slot] = out[slot] + v_coeff * val
    return CtClass(out)


def restrict_to_ct(c: TautClass2) -> CtClass:
    """Restriction of a full-space class to the compact-type locus."""
    expr: Expr = {}
    for slot, monomials in enumerate(BASIS_MONOMIALS):
        coeff = c.coeffs[slot]
        if coeff.is_zero():
            continue
        for m in monomials:
            expr[m] = expr.get(m, PolyQ()) + coeff
    return reduce_ct(expr)


def hain_class(d: PolyLike) -> CtClass:
    """Pull-back of the Jacobian zero section along [C,p1,p2] -> O(d p1 - d p2).

    Half the square of the divisor (d^2/2)((psi1-d2)+(psi2-d2)) + d^2 d2
    - (d^2/2) d11; reduces to
    d^4 ( (1/4)(psi1+psi2)(d12-d11) - d2^2 - (7/10) d12*d2 ).
    """
    half_d2 = as_poly(d) * as_poly(d) / 2
    divisor = [PolyQ()] * 6
    divisor[PSI1] = half_d2
    divisor[PSI2] = half_d2
    divisor[D2] = -half_d2 - half_d2 + 2 * half_d2  # the d2 terms cancel
    divisor[D11] = -half_d2
    square = expand_product(divisor, divisor)
    return reduce_ct({m: c / 2 for m, c in square.items()})


@dataclass(frozen=True)
class DecoratedRows:
    """Expressions of the decorated classes in the compact-type basis.

    d11_12 (the third decorated basis member) is d12*d2 by definition, so it
    is the fifth basis vector and carried implicitly.
    """

    d22: CtClass
    d11bar: CtClass


def derive_decorated_rows() -> DecoratedRows:
    """Solve for d22 and d11| from the two known decorated expansions.

    The Hain class equals d^4 (d22 + d11| - (1/5) d12*d2) and the restricted
    degree-d class equals (d^2-1)((d^2+1) d22 + (d^2-1) d11| -
    ((d^2+6)/5) d12*d2).  Slot-wise in d these give x + y and x - y for
    x = d22, y = d11|; the redundant d^2-coefficient match and full
    re-substitution guard against transcription slips.
    """
    from .chow import dr2_class
    from .polyq import D

    e5 = CtClass.unit(4)

    hain = hain_class(D)
    hbar = []
    for coeff in hain.coeffs:
        for k, c in enumerate(coeff.coeffs):
            if c != 0 and k != 4:
                raise ArithmeticError("Hain class is not a pure d^4 multiple")
        hbar.append(coeff.coefficient(4))
    sum_xy = CtClass(hbar) + e5.scale(Fraction(1, 5))

    restricted = restrict_to_ct(dr2_class(D))
    lead, const = [], []
    for coeff in restricted.coeffs:
        # coeff = (d^2-1) * (L2 d^2 + L0): quartic in d with no odd terms
        quotient = _divide_by_d2_minus_1(coeff)
        if quotient.degree > 2 or quotient.coefficient(1) != 0:
            raise ArithmeticError("unexpected degree structure in restriction")
        lead.append(quotient.coefficient(2))
        const.append(quotient.coefficient(0))
    # d^2-coefficient match: must reproduce x + y - (1/5) e5.
    if CtClass(lead) != sum_xy - e5.scale(Fraction(1, 5)):
        raise ArithmeticError("degree-2 coefficient match failed")
    diff_xy = CtClass(const) + e5.scale(Fraction(6, 5))

    d22 = (sum_xy + diff_xy).scale(Fraction(1, 2))
    d11bar = (sum_xy - diff_xy).scale(Fraction(1, 2))

    # Re-substitute into both displayed expansions.
    d2sq = as_poly(D) * as_poly(D)
    lhs1 = (d22 + d11bar - e5.scale(Fraction(1, 5))).scale(d2sq * d2sq)
    if lhs1 != hain:
        raise ArithmeticError("re-substitution into the Hain expansion failed")
    lhs2 = (
        d22.scale(d2sq + 1) + d11bar.scale(d2sq - 1) - e5.scale((d2sq + 6) / 5)
    ).scale(d2sq - 1)
    if lhs2 != restricted:
        raise ArithmeticError("re-substitution into the class expansion failed")
    return DecoratedRows(d22=d22, d11bar=d11bar)


def _divide_by_d2_minus_1(p: PolyQ) -> PolyQ:
    """Exact division by d^2 - 1 (errors if it does not divide)."""
    rem = list(p.coeffs)
    out = [Fraction(0)] * max(len(rem) - 2, 0)
    for k in range(len(rem) - 1, 1, -1):
        c = rem[k]
        if c == 0:
            continue
        out[k - 2] = c
        rem[k] = Fraction(0)
        rem[k - 2] += c
    if any(c != 0 for c in rem):
        raise ArithmeticError(f"{p} is not divisible by d^2 - 1")
    return PolyQ(out)


@dataclass(frozen=True)
class HacReport:
    """Outcome of the Hain-class comparison, as polynomial identities."""

    hain: CtClass
    restricted: CtClass
    difference: CtClass
    decorated: DecoratedRows
    difference_formula_ok: bool
    decomposition_ok: bool

    @property
    def ok(self) -> bool:
        return self.difference_formula_ok and self.decomposition_ok


def verify_hac(d: Optional[PolyLike] = None) -> HacReport:
    """Check that Hain class minus restricted class equals
    d22 + (2d^2-1) d11| + (d^2 - 6/5) d12*d2, symbolically by default."""
    from .chow import dr2_class
    from .polyq import D

    dd = as_poly(d) if d is not None else D
    d2sq = dd * dd
    hain = hain_class(dd)
    restricted = restrict_to_ct(dr2_class(dd))
    difference = hain - restricted

    # Intermediate closed form of the difference.
    q = (2 * d2sq - 1) / 4
    formula = CtClass((-q, q, q, PolyQ.const(-1), PolyQ.const(Fraction(-7, 10))))
    difference_formula_ok = difference == formula

    rows = derive_decorated_rows()
    e5 = CtClass.unit(4)
    decomposition = (
        rows.d22 + rows.d11bar.scale(2 * d2sq - 1) + e5.scale(d2sq - Fraction(6, 5))
    )
    decomposition_ok = decomposition == difference
    return HacReport(
        hain=hain,
        restricted=restricted,
        difference=difference,
        decorated=rows,
        difference_formula_ok=difference_formula_ok,
        decomposition_ok=decomposition_ok,
    )

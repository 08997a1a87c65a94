"""Degree-1 and degree-2 tautological classes on the 2-pointed genus-2 space.

The divisor generators, in fixed order, are

    psi1, psi2, d0, d2, d11, d12

where psi_i are the cotangent classes at the markings, d0 is the irreducible
nodal divisor, d2 the divisor whose general member is a genus-2 curve with a
rational 2-marked tail, d11 the divisor of two 1-marked elliptic components,
and d12 the divisor of two elliptic components with both markings on one.

The degree-2 group is the span of the 21 unordered products of these six
generators modulo seven relations (Getzler); the quotient is 14-dimensional.
We use the basis

    psi1*psi2, psi1^2+psi2^2, psi1*d11, psi2*d11, psi1*d12, psi2*d12,
    psi1*d0, psi2*d0, d2^2, d12*d2, d0*d2, d0*d11, d0*d12, d0^2

with the symmetric combination psi1^2+psi2^2 fused into a single coordinate
(the antisymmetric combination psi1^2-psi2^2 is eliminated by the relation
(psi1-psi2)(10psi1+10psi2-2d11-12d12-d0) = 0).  A reduced echelon form of the
relations, with pivots forced onto the seven non-basis coordinates, is
precomputed once at import; every reduction then goes through that table, so
two expressions differing by a relation reduce identically.

A ``TautClass2`` is the 14-vector of coefficients in this basis, each entry a
polynomial in the cover degree d.  A ``DivisorM22`` is the 6-vector of divisor
coefficients.  All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .linalg import reduced_echelon
from .polyq import PolyLike, PolyQ, Scalar, as_poly

GENERATORS = ("psi1", "psi2", "d0", "d2", "d11", "d12")
PSI1, PSI2, D0, D2, D11, D12 = range(6)

Monomial = Tuple[int, int]


def mono(i: int, j: int) -> Monomial:
    """Unordered degree-2 monomial in the generators: mono(i, j) == mono(j, i)."""
    return (i, j) if i <= j else (j, i)


MONOMIALS: Tuple[Monomial, ...] = tuple(
    (i, j) for i in range(6) for j in range(i, 6)
)


def monomial_name(m: Monomial) -> str:
    i, j = m
    if i == j:
        return f"{GENERATORS[i]}sq"
    return f"{GENERATORS[i]}{GENERATORS[j]}"


# Basis slot order; names are the wire format used by the JSON emitters.
BASIS_NAMES = (
    "psi1psi2",
    "psi1sq+psi2sq",
    "psi1d11",
    "psi2d11",
    "psi1d12",
    "psi2d12",
    "psi1d0",
    "psi2d0",
    "d2sq",
    "d12d2",
    "d0d2",
    "d0d11",
    "d0d12",
    "d0sq",
)
FUSED_SLOT = 1

# Generator pairs paired against each basis slot (the fused slot carries two).
BASIS_MONOMIALS: Tuple[Tuple[Monomial, ...], ...] = (
    (mono(PSI1, PSI2),),
    (mono(PSI1, PSI1), mono(PSI2, PSI2)),
    (mono(PSI1, D11),),
    (mono(PSI2, D11),),
    (mono(PSI1, D12),),
    (mono(PSI2, D12),),
    (mono(PSI1, D0),),
    (mono(PSI2, D0),),
    (mono(D2, D2),),
    (mono(D12, D2),),
    (mono(D0, D2),),
    (mono(D0, D11),),
    (mono(D0, D12),),
    (mono(D0, D0),),
)

Expr = Dict[Monomial, PolyQ]


def expand_product(a: Sequence[PolyLike], b: Sequence[PolyLike]) -> Expr:
    """Formal expansion of a product of two divisor coefficient 6-vectors."""
    out: Expr = {}
    for i, ai in enumerate(a):
        pi = as_poly(ai)
        if pi.is_zero():
            continue
        for j, bj in enumerate(b):
            pj = as_poly(bj)
            if pj.is_zero():
                continue
            m = mono(i, j)
            out[m] = out.get(m, PolyQ()) + pi * pj
    return {m: c for m, c in out.items() if not c.is_zero()}


def _unit(index: int) -> Tuple[int, ...]:
    v = [0] * 6
    v[index] = 1
    return tuple(v)


def _build_relations() -> Tuple[Expr, ...]:
    one = Fraction(1)
    psi1, psi2 = _unit(PSI1), _unit(PSI2)
    d0, d2, d11, d12 = _unit(D0), _unit(D2), _unit(D11), _unit(D12)
    both_elliptic = (0, 0, one, 0, 12 * one, 12 * one)  # 12*d11 + 12*d12 + d0
    psi_sum_d11 = (one, one, 0, 0, one, 0)  # psi1 + psi2 + d11
    psi_diff = (one, -one, 0, 0, 0, 0)
    mixed = (10 * one, 10 * one, -one, 0, -2 * one, -12 * one)
    return (
        expand_product(d12, both_elliptic),
        expand_product(d11, both_elliptic),
        expand_product(d11, psi_sum_d11),
        expand_product(psi1, d2),
        expand_product(psi2, d2),
        expand_product(d11, d2),
        expand_product(psi_diff, mixed),
    )


#: The seven degree-2 relations; each reduces to the zero class.
RELATIONS: Tuple[Expr, ...] = _build_relations()

# ---------------------------------------------------------------------------
# Reduction table.
#
# Coordinates: the 21 monomials, except that (psi1^2, psi2^2) is traded for
# the pair (s, t) = (symmetric, antisymmetric) combination.  A class with
# monomial coefficients c1 on psi1^2 and c2 on psi2^2 has s-coordinate
# (c1+c2)/2 and t-coordinate (c1-c2)/2.
# ---------------------------------------------------------------------------

_SQ1 = mono(PSI1, PSI1)
_SQ2 = mono(PSI2, PSI2)
_S_COORD = "s"
_T_COORD = "t"

_COORDS: Tuple[object, ...] = (_S_COORD, _T_COORD) + tuple(
    m for m in MONOMIALS if m not in (_SQ1, _SQ2)
)
_COORD_INDEX = {c: k for k, c in enumerate(_COORDS)}

_BASIS_COORDS = (_S_COORD,) + tuple(
    slots[0] for k, slots in enumerate(BASIS_MONOMIALS) if k != FUSED_SLOT
)
_NONBASIS_COORDS = tuple(c for c in _COORDS if c not in _BASIS_COORDS)

# Slot index of each basis coordinate (the fused slot belongs to "s").
_SLOT_OF_COORD = {_S_COORD: FUSED_SLOT}
for _k, _slots in enumerate(BASIS_MONOMIALS):
    if _k != FUSED_SLOT:
        _SLOT_OF_COORD[_slots[0]] = _k


def _expr_to_coords(expr: Mapping[Monomial, Fraction]) -> list:
    vec = [Fraction(0)] * len(_COORDS)
    for m, c in expr.items():
        c = Fraction(c)
        if m == _SQ1:
            vec[_COORD_INDEX[_S_COORD]] += c / 2
            vec[_COORD_INDEX[_T_COORD]] += c / 2
        elif m == _SQ2:
            vec[_COORD_INDEX[_S_COORD]] += c / 2
            vec[_COORD_INDEX[_T_COORD]] -= c / 2
        else:
            vec[_COORD_INDEX[m]] += c
    return vec


def _build_rewrite() -> Dict[object, Tuple[Fraction, ...]]:
    rows = []
    for rel in RELATIONS:
        rows.append(_expr_to_coords({m: c.constant_value() for m, c in rel.items()}))
    order = [_COORD_INDEX[c] for c in _NONBASIS_COORDS] + [
        _COORD_INDEX[c] for c in _BASIS_COORDS
    ]
    entries = reduced_echelon(rows, order)
    if len(entries) != 7:
        raise AssertionError(f"relation span has rank {len(entries)}, expected 7")
    pivot_cols = {col for col, _ in entries}
    expected = {_COORD_INDEX[c] for c in _NONBASIS_COORDS}
    if pivot_cols != expected:
        raise AssertionError("relation pivots missed a non-basis coordinate")
    rewrite: Dict[object, Tuple[Fraction, ...]] = {}
    for col, row in entries:
        out = [Fraction(0)] * 14
        for k, val in enumerate(row):
            if k == col or val == 0:
                continue
            coord = _COORDS[k]
            out[_SLOT_OF_COORD[coord]] -= val
        rewrite[_COORDS[col]] = tuple(out)
    return rewrite


_REWRITE = _build_rewrite()


# ---------------------------------------------------------------------------
# Class vectors.
# ---------------------------------------------------------------------------


class TautClass2:
    """A degree-2 tautological class: 14 polynomial coefficients in the basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PolyLike]):
        cs = tuple(as_poly(c) for c in coeffs)
        if len(cs) != 14:
            raise ValueError(f"expected 14 coefficients, got {len(cs)}")
        self.coeffs: Tuple[PolyQ, ...] = cs

    @classmethod
    def zero(cls) -> "TautClass2":
        return cls((PolyQ(),) * 14)

    @classmethod
    def unit(cls, slot: int) -> "TautClass2":
        cs = [PolyQ()] * 14
        cs[slot] = PolyQ((1,))
        return cls(cs)

    def __add__(self, other: "TautClass2") -> "TautClass2":
        return TautClass2(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "TautClass2") -> "TautClass2":
        return TautClass2(a - b for a, b in zip(self.coeffs, other.coeffs))

    def scale(self, factor: PolyLike) -> "TautClass2":
        f = as_poly(factor)
        return TautClass2(f * c for c in self.coeffs)

    def eval_at(self, x: Scalar) -> "TautClass2":
        return TautClass2(PolyQ.const(c(x)) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TautClass2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json_dict(self) -> Dict[str, list]:
        return {name: c.to_strings() for name, c in zip(BASIS_NAMES, self.coeffs)}

    @classmethod
    def from_json_dict(cls, data: Mapping[str, Sequence[str]]) -> "TautClass2":
        return cls(PolyQ.from_strings(data.get(name, ())) for name in BASIS_NAMES)

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{name}: {c}" for name, c in zip(BASIS_NAMES, self.coeffs) if c
        )
        return f"TautClass2({terms or '0'})"


class DivisorM22:
    """A divisor class: 6 coefficients on (psi1, psi2, d0, d2, d11, d12)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PolyLike]):
        cs = tuple(as_poly(c) for c in coeffs)
        if len(cs) != 6:
            raise ValueError(f"expected 6 coefficients, got {len(cs)}")
        self.coeffs: Tuple[PolyQ, ...] = cs

    @classmethod
    def generator(cls, index: int) -> "DivisorM22":
        return cls(_unit(index))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DivisorM22):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{g}: {c}" for g, c in zip(GENERATORS, self.coeffs) if c
        )
        return f"DivisorM22({terms or '0'})"


def reduce_to_basis(expr: Mapping[Monomial, PolyLike]) -> TautClass2:
    """Canonical coordinates of a formal combination of the 21 monomials.

    Linear, and constant on cosets of the relation span: two expressions
    differing by a relation reduce to the same vector.  The empty expression
    reduces to zero.
    """
    out = [PolyQ()] * 14
    t_coeff = PolyQ()
    for m, raw in expr.items():
        m = mono(*m)
        c = as_poly(raw)
        if c.is_zero():
            continue
        if m == _SQ1:
            out[FUSED_SLOT] = out[FUSED_SLOT] + c / 2
            t_coeff = t_coeff + c / 2
        elif m == _SQ2:
            out[FUSED_SLOT] = out[FUSED_SLOT] + c / 2
            t_coeff = t_coeff - c / 2
        elif m in _SLOT_OF_COORD:
            slot = _SLOT_OF_COORD[m]
            out[slot] = out[slot] + c
        else:
            for slot, val in enumerate(_REWRITE[m]):
                if val != 0:
                    out[slot] = out[slot] + c * val
    if not t_coeff.is_zero():
        for slot, val in enumerate(_REWRITE[_T_COORD]):
            if val != 0:
                out[slot] = out[slot] + t_coeff * val
    return TautClass2(out)


def multiply_divisors(a: DivisorM22, b: DivisorM22) -> TautClass2:
    """Product of two divisor classes, reduced to the 14-basis."""
    return reduce_to_basis(expand_product(a.coeffs, b.coeffs))


def dr2_class(d: PolyLike) -> TautClass2:
    """The class of the closed degree-d double-ramification locus.

    ``d`` may be an integer, a Fraction, or a polynomial (pass the variable
    ``polyq.D`` for the fully symbolic class).  Every slot carries the global
    factor d^2 - 1, so the class vanishes at d = 1.
    """
    d2 = as_poly(d) * as_poly(d)
    f = d2 - 1
    psi_d11 = -f * (3 * d2 + 2) / 20
    psi_d12 = f * (d2 - 6) / 10
    psi_d0 = f * (d2 - 6) / 120
    return TautClass2(
        (
            f * d2 / 2,
            f * (2 - d2) / 4,
            psi_d11,
            psi_d11,
            psi_d12,
            psi_d12,
            psi_d0,
            psi_d0,
            PolyQ(),
            PolyQ(),
            PolyQ(),
            PolyQ(),
            PolyQ(),
            PolyQ(),
        )
    )


# Slot permutation induced by exchanging the two marked points.
_SWAP = (0, 1, 3, 2, 5, 4, 7, 6, 8, 9, 10, 11, 12, 13)


def swap_markings(c: TautClass2) -> TautClass2:
    """Exchange the roles of the two marked points (an involution)."""
    return TautClass2(c.coeffs[k] for k in _SWAP)


def class_to_markdown(c: TautClass2) -> str:
    """Human-readable coefficient table, one basis monomial per line."""
    width = max(len(n) for n in BASIS_NAMES)
    lines = [f"| {'monomial':<{width}} | coefficient |", f"|{'-' * (width + 2)}|-------------|"]
    for name, coeff in zip(BASIS_NAMES, c.coeffs):
        lines.append(f"| {name:<{width}} | {coeff} |")
    return "\n".join(lines)

"""Exact rational and polynomial arithmetic in the cover degree d.

Rationals are ``fractions.Fraction``: arbitrary precision, always stored in
lowest terms with positive denominator.  A polynomial in d is a tuple of
Fractions in ascending order of degree with trailing zeros stripped; the zero
polynomial is the empty tuple and reports degree ``-inf``.

Nothing in this module ever rounds.  Fixed-width integers are deliberately
avoided: lattice pairings and interpolation denominators elsewhere in the
package overflow 64 bits on adversarial inputs.

Serialization: a rational renders as ``"p/q"`` (or ``"p"`` when q = 1); a
polynomial renders as the ascending list of such strings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


def format_rational(q: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or "p" back into a Fraction."""
    return Fraction(s)


class PolyQ:
    """Univariate polynomial in the degree parameter with Fraction coefficients.

    Immutable after construction.  Coefficients are ascending: ``PolyQ((a, b, c))``
    is a + b*d + c*d^2.  Degrees in this package never exceed 4, so the dense
    representation is the right one.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[Scalar, str]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, value: Scalar) -> "PolyQ":
        return cls((Fraction(value),))

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "PolyQ":
        return cls(tuple(Fraction(s) for s in strings))

    def to_strings(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @property
    def degree(self):
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (errors if degree > 0)."""
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "PolyQ":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ(
            (self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ((-c for c in self.coeffs))

    def __sub__(self, other) -> "PolyQ":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "PolyQ":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "PolyQ":
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "PolyQ":
        scalar = Fraction(scalar)
        return PolyQ((c / scalar for c in self.coeffs))

    def __pow__(self, n: int) -> "PolyQ":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = PolyQ((1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                var = "d" if k == 1 else f"d^{k}"
                body = var if mag == 1 else f"{format_rational(mag)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


#: The polynomial "d" itself, the symbolic cover degree.
D = PolyQ((0, 1))

PolyLike = Union[PolyQ, Scalar]


def _coerce(value) -> PolyQ:
    if isinstance(value, PolyQ):
        return value
    return PolyQ.const(value)


def as_poly(value: Union[PolyQ, Scalar]) -> PolyQ:
    """Lift an int/Fraction to a constant polynomial; pass PolyQ through."""
    return _coerce(value)


def poly_eval(p: PolyQ, x: Scalar) -> Fraction:
    """Exact value of p at the rational point x."""
    return p(x)


def poly_interpolate(samples: Iterable[Tuple[Scalar, Scalar]]) -> PolyQ:
    """The unique polynomial of degree < n through n samples (Newton form).

    Raises ValueError on duplicate abscissae or empty input.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in samples]
    if not pts:
        raise ValueError("at least one sample is required")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae make interpolation ill-posed")
    # Divided differences, in place.
    coef = [y for _, y in pts]
    for level in range(1, len(pts)):
        for i in range(len(pts) - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = PolyQ()
    basis = PolyQ((1,))
    for k, c in enumerate(coef):
        if k:
            basis = basis * PolyQ((-xs[k - 1], 1))
        poly = poly + basis * c
    return poly

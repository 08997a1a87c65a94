"""Test surfaces and the 16-equation linear system for the degree-2 class.

Each of the ten 2-parameter families of stable curves is shipped as a JSON
fixture: an ambient intersection lattice (named generators plus a symmetric
rational Gram matrix), the restriction of each divisor generator to the base
of the family, the polynomial count of fibers meeting the degree-d locus
(the right-hand side), and a free-text provenance note.  Keeping the lattice
data in versioned files rather than in code makes the transcription — the
main error risk — auditable entry by entry.

Pairing restricted divisor monomials in the lattice turns each surface into
a linear functional on class vectors; together with the three marking-swap
symmetry rows and the three push-forward rows this gives the full system of
16 equations whose solution is the degree-d class.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Dict, Sequence, Tuple

from . import m21
from .chow import BASIS_MONOMIALS, BASIS_NAMES, GENERATORS, TautClass2
from .polyq import D, PolyQ

FIXTURE_NAMES = tuple(f"family{k:02d}.json" for k in range(1, 11))


@dataclass(frozen=True)
class SurfaceModel:
    """One test surface: lattice, divisor restrictions, fiber count, note."""

    name: str
    family: int
    generators: Tuple[str, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    restrictions: Dict[str, Tuple[Fraction, ...]]
    rhs: PolyQ
    rationale: str

    def restriction(self, generator: str) -> Tuple[Fraction, ...]:
        """Restriction vector of a divisor generator; absent means zero."""
        if generator not in GENERATORS:
            raise KeyError(f"unknown divisor generator {generator!r}")
        return self.restrictions.get(
            generator, (Fraction(0),) * len(self.generators)
        )

    def pair_vectors(
        self, u: Sequence[Fraction], v: Sequence[Fraction]
    ) -> Fraction:
        return sum(
            (
                ui * self.gram[i][j] * vj
                for i, ui in enumerate(u)
                if ui
                for j, vj in enumerate(v)
                if vj
            ),
            Fraction(0),
        )

    def pair_generators(self, gen_a: str, gen_b: str) -> Fraction:
        """Intersection number of two restricted divisor generators."""
        return self.pair_vectors(self.restriction(gen_a), self.restriction(gen_b))


@dataclass(frozen=True)
class EquationRow:
    """A linear functional on class vectors, with its polynomial target value."""

    coefficients: Tuple[Fraction, ...]
    rhs: PolyQ
    label: str
    kind: str
    provenance: str = ""

    def apply(self, c: TautClass2) -> PolyQ:
        out = PolyQ()
        for coeff, slot in zip(self.coefficients, c.coeffs):
            if coeff and not slot.is_zero():
                out = out + slot * coeff
        return out

    def residual(self, c: TautClass2) -> PolyQ:
        return self.apply(c) - self.rhs

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "kind": self.kind,
            "coefficients": {
                name: str(coeff)
                for name, coeff in zip(BASIS_NAMES, self.coefficients)
                if coeff
            },
            "rhs": self.rhs.to_strings(),
            "provenance": self.provenance,
        }


def _parse_surface(doc: dict) -> SurfaceModel:
    gram = tuple(tuple(Fraction(x) for x in row) for row in doc["gram"])
    n = len(doc["generators"])
    if len(gram) != n or any(len(row) != n for row in gram):
        raise ValueError(f"{doc['name']}: gram shape does not match generators")
    restrictions = {}
    for gen, vec in doc["restrictions"].items():
        if gen not in GENERATORS:
            raise ValueError(f"{doc['name']}: unknown generator {gen!r}")
        if len(vec) != n:
            raise ValueError(f"{doc['name']}: restriction length for {gen!r}")
        restrictions[gen] = tuple(Fraction(x) for x in vec)
    return SurfaceModel(
        name=doc["name"],
        family=int(doc["family"]),
        generators=tuple(doc["generators"]),
        gram=gram,
        restrictions=restrictions,
        rhs=PolyQ.from_strings(doc["rhs"]),
        rationale=doc["rationale"],
    )


def _fixture_bytes() -> Dict[str, bytes]:
    out = {}
    package = resources.files(__package__) / "fixtures"
    for fname in FIXTURE_NAMES:
        out[fname] = (package / fname).read_bytes()
    return out


def fixture_checksums() -> Dict[str, str]:
    """SHA-256 of each shipped fixture file, keyed by file name."""
    return {
        name: hashlib.sha256(blob).hexdigest()
        for name, blob in _fixture_bytes().items()
    }


def builtin_surfaces() -> Tuple[SurfaceModel, ...]:
    """The ten test surfaces, loaded from the shipped fixtures."""
    return tuple(
        _parse_surface(json.loads(blob.decode("utf-8")))
        for _, blob in sorted(_fixture_bytes().items())
    )


def equation_row(surface: SurfaceModel) -> EquationRow:
    """The linear equation a surface imposes on the 14 class coefficients.

    Coefficient k is the Gram pairing of the k-th basis monomial with the
    surface; the fused slot receives the psi1^2 pairing plus the psi2^2
    pairing.  Raises ValueError on an asymmetric Gram matrix.
    """
    n = len(surface.generators)
    for i in range(n):
        for j in range(i + 1, n):
            if surface.gram[i][j] != surface.gram[j][i]:
                raise ValueError(f"{surface.name}: gram matrix is not symmetric")
    coeffs = []
    for monomials in BASIS_MONOMIALS:
        total = Fraction(0)
        for gi, gj in monomials:
            total += surface.pair_generators(GENERATORS[gi], GENERATORS[gj])
        coeffs.append(total)
    return EquationRow(
        coefficients=tuple(coeffs),
        rhs=surface.rhs,
        label=f"surface-{surface.family:02d}",
        kind="surface",
        provenance=surface.rationale,
    )


_SYMMETRY_PAIRS = ((2, 3, "psi*d11"), (4, 5, "psi*d12"), (6, 7, "psi*d0"))


def symmetry_rows() -> Tuple[EquationRow, ...]:
    """Marking symmetry: the paired psi1/psi2 coefficients must agree."""
    rows = []
    for a, b, what in _SYMMETRY_PAIRS:
        coeffs = [Fraction(0)] * 14
        coeffs[a] = Fraction(1)
        coeffs[b] = Fraction(-1)
        rows.append(
            EquationRow(
                coefficients=tuple(coeffs),
                rhs=PolyQ(),
                label=f"symmetry-{what}",
                kind="symmetry",
                provenance=(
                    "the locus is symmetric in the two marked points, so the "
                    f"two {what} coefficients coincide"
                ),
            )
        )
    return tuple(rows)


def pushforward_rows() -> Tuple[EquationRow, ...]:
    """Matching the push-forward to the 1-pointed space coefficient-wise.

    The row for each target coordinate (psi, d0, d1) reads off the
    coordinate of the push-forward of the 14-basis, so these rows are
    exactly the coordinate functionals of the push-forward map; the
    right-hand sides are the coordinates of the known pushed-forward class.
    """
    target = m21.pushforward_class_formula(D)
    rows = []
    for k, name in enumerate(m21.M21_NAMES):
        coeffs = tuple(images[k] for images in m21.PUSHFORWARD_TABLE_PI1)
        rows.append(
            EquationRow(
                coefficients=coeffs,
                rhs=target.coeffs[k],
                label=f"pushforward-{name}",
                kind="pushforward",
                provenance=(
                    f"{name} coordinate of the push-forward along the map "
                    "forgetting the first marked point"
                ),
            )
        )
    return tuple(rows)


def full_system_rows() -> Tuple[EquationRow, ...]:
    """All 16 rows: the ten surfaces, then symmetry, then push-forward."""
    return (
        tuple(equation_row(s) for s in builtin_surfaces())
        + symmetry_rows()
        + pushforward_rows()
    )


# Every intersection number displayed alongside the family constructions,
# keyed by family; used for the golden-number check.
DISPLAYED_INTERSECTIONS: Tuple[Tuple[int, str, str, Fraction], ...] = tuple(
    (fam, a, b, Fraction(v))
    for fam, a, b, v in (
        (1, "psi1", "psi1", 2),
        (1, "psi2", "psi2", 2),
        (1, "psi1", "psi2", 6),
        (1, "d2", "d2", -2),
        (2, "psi1", "psi2", 1),
        (2, "psi1", "d11", -1),
        (2, "psi2", "d11", -1),
        (2, "psi1", "d12", 1),
        (2, "psi2", "d12", 1),
        (3, "d0", "d0", 288),
        (3, "d0", "d12", -24),
        (4, "psi2", "d12", -1),
        (4, "psi2", "d0", 12),
        (4, "d0", "d12", 12),
        (4, "d0", "d11", -12),
        (5, "psi1", "psi1", 1),
        (5, "psi1", "d11", -1),
        (5, "psi1", "d0", 12),
        (5, "d0", "d12", 12),
        (5, "d0", "d11", -12),
        (6, "d0", "d12", 12),
        (6, "d0", "d0", -44),
        (7, "d2", "d2", 1),
        (7, "d12", "d2", 1),
        (7, "d0", "d2", -12),
        (8, "d12", "d2", 1),
        (8, "d0", "d2", -12),
        (9, "psi1", "d12", -1),
        (9, "psi2", "d12", -1),
        (9, "psi1", "d0", 12),
        (9, "psi2", "d0", 12),
        (10, "d2", "d2", 1),
        (10, "d12", "d2", -2),
        (10, "d0", "d2", 4),
    )
)

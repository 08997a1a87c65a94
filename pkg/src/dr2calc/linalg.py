"""Exact dense linear algebra over Fraction for small systems.

Everything here is plain Gaussian elimination.  Exact arithmetic needs no
numerical pivoting, so pivots are chosen as the first nonzero entry in row
order; output is therefore deterministic across runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Row = List[Fraction]


class LinearSystemError(Exception):
    pass


class UnderdeterminedSystemError(LinearSystemError):
    """Raised when a system has fewer independent rows than unknowns."""


class InconsistentSystemError(LinearSystemError):
    """Raised when a row contradicts the rest of the system."""

    def __init__(self, row_index: int, message: Optional[str] = None):
        self.row_index = row_index
        super().__init__(message or f"system is inconsistent at row {row_index}")


def _copy(rows: Sequence[Sequence[Fraction]]) -> List[Row]:
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the matrix, by forward elimination on a copy."""
    m = _copy(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / inv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve_unique(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> List[Fraction]:
    """Solve a (possibly overdetermined) system with a unique solution.

    Raises UnderdeterminedSystemError if the coefficient rank is below the
    number of unknowns, and InconsistentSystemError naming the first original
    row that the candidate solution fails to satisfy.
    """
    if len(rows) != len(rhs):
        raise ValueError("row/rhs length mismatch")
    m = _copy(rows)
    b = [Fraction(x) for x in rhs]
    if not m:
        raise UnderdeterminedSystemError("empty system")
    ncols = len(m[0])

    # Forward elimination, tracking pivot positions.
    pivots: List[Tuple[int, int]] = []  # (row, col) in the reduced matrix
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        b[r], b[pivot] = b[pivot], b[r]
        inv = m[r][col]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / inv
                m[i] = [a - f * c for a, c in zip(m[i], m[r])]
                b[i] -= f * b[r]
        pivots.append((r, col))
        r += 1
        if r == len(m):
            break
    if len(pivots) < ncols:
        raise UnderdeterminedSystemError(
            f"rank {len(pivots)} < {ncols} unknowns"
        )

    solution = [Fraction(0)] * ncols
    for prow, pcol in pivots:
        solution[pcol] = b[prow] / m[prow][pcol]

    # Verify against the original rows so the offending index is meaningful.
    for k, (row, target) in enumerate(zip(rows, rhs)):
        acc = sum((Fraction(a) * x for a, x in zip(row, solution)), Fraction(0))
        if acc != Fraction(target):
            raise InconsistentSystemError(k)
    return solution


def row_dependencies(
    rows: Sequence[Sequence[Fraction]],
) -> List[Tuple[int, Dict[int, Fraction]]]:
    """Find rows dependent on earlier ones.

    Processing rows in order, the first maximal independent subset is kept;
    each remaining row is returned as ``(index, combo)`` where
    ``rows[index] == sum(combo[k] * rows[k] for k)`` over independent rows.
    """
    basis: List[Tuple[Row, Dict[int, Fraction]]] = []  # (vector, expansion)
    out: List[Tuple[int, Dict[int, Fraction]]] = []
    for idx, raw in enumerate(rows):
        vec = [Fraction(x) for x in raw]
        expansion: Dict[int, Fraction] = {idx: Fraction(1)}
        for bvec, bexp in basis:
            lead = next((c for c in range(len(bvec)) if bvec[c] != 0), None)
            if lead is None or vec[lead] == 0:
                continue
            f = vec[lead] / bvec[lead]
            vec = [a - f * b for a, b in zip(vec, bvec)]
            for k, v in bexp.items():
                expansion[k] = expansion.get(k, Fraction(0)) - f * v
        if any(x != 0 for x in vec):
            basis.append((vec, expansion))
        else:
            combo = {
                k: -v for k, v in expansion.items() if k != idx and v != 0
            }
            out.append((idx, combo))
    return out


def reduced_echelon(
    rows: Sequence[Sequence[Fraction]], column_order: Sequence[int]
) -> List[Tuple[int, Row]]:
    """Full reduced row echelon form with pivot columns tried in a given order.

    Returns ``(pivot_col, row)`` pairs where each row is normalized to 1 at
    its pivot and zero at every other pivot column.
    """
    remaining = _copy(rows)
    entries: List[Tuple[int, Row]] = []
    for col in column_order:
        pick = next((i for i, r in enumerate(remaining) if r[col] != 0), None)
        if pick is None:
            continue
        row = remaining.pop(pick)
        row = [x / row[col] for x in row]
        for i, other in enumerate(remaining):
            if other[col] != 0:
                f = other[col]
                remaining[i] = [a - f * b for a, b in zip(other, row)]
        for j, (pcol, prow) in enumerate(entries):
            if prow[col] != 0:
                f = prow[col]
                entries[j] = (pcol, [a - f * b for a, b in zip(prow, row)])
        entries.append((col, row))
    if any(any(x != 0 for x in r) for r in remaining):
        raise LinearSystemError("column order did not sweep all pivots")
    return entries

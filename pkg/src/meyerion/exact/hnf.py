"""Hermite normal form over Z and integer-lattice membership.

The membership test is the workhorse behind cut types: deciding whether a
field value l(h) lies in the subgroup l(Gamma) of R reduces, after splitting
into rational and radical components, to membership of a rational vector in
the Z-span of finitely many rational vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from ..errors import InputError


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> "IntMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in data)
        rows = len(entries)
        cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise InputError("ragged integer matrix")
        return cls(rows, cols, entries)


def hermite_row(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns (H, U) with H = U*A, U unimodular.

    H is in row echelon form with positive pivots and entries above each
    pivot reduced into [0, pivot).
    """
    m, n = a.rows, a.cols
    h = [list(r) for r in a.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivot_row = 0
    for col in range(n):
        # find a row with nonzero entry in this column at or below pivot_row
        rows_nz = [r for r in range(pivot_row, m) if h[r][col] != 0]
        if not rows_nz:
            continue
        # euclidean reduction of the column below pivot_row
        while len(rows_nz) > 1:
            rows_nz.sort(key=lambda r: abs(h[r][col]))
            r0 = rows_nz[0]
            for r in rows_nz[1:]:
                q = h[r][col] // h[r0][col]
                if q:
                    h[r] = [x - q * y for x, y in zip(h[r], h[r0])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[r0])]
            rows_nz = [r for r in rows_nz if h[r][col] != 0]
        r0 = rows_nz[0]
        if r0 != pivot_row:
            h[r0], h[pivot_row] = h[pivot_row], h[r0]
            u[r0], u[pivot_row] = u[pivot_row], u[r0]
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        piv = h[pivot_row][col]
        for r in range(pivot_row):
            q = h[r][col] // piv
            if q:
                h[r] = [x - q * y for x, y in zip(h[r], h[pivot_row])]
                u[r] = [x - q * y for x, y in zip(u[r], u[pivot_row])]
        pivot_row += 1
    return (
        IntMatrix.from_rows(h),
        IntMatrix.from_rows(u),
    )


def left_kernel_basis(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of {x in Z^rows : x^T A = 0}, read off the zero rows of H = U A."""
    h, u = hermite_row(a)
    basis = []
    for i, row in enumerate(h.entries):
        if all(v == 0 for v in row):
            basis.append(u.entries[i])
    return basis


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    coefficients: tuple[int, ...] | None


def hnf_membership(
    generators: Sequence[Sequence[Fraction | int]],
    target: Sequence[Fraction | int],
) -> MembershipResult:
    """Decide whether target lies in the Z-span of the generators in Q^m.

    When it does, the returned coefficients x satisfy
    sum_j x_j * generators[j] == target exactly.
    """
    gens = [tuple(Fraction(v) for v in g) for g in generators]
    tgt = tuple(Fraction(v) for v in target)
    if not gens:
        return MembershipResult(all(v == 0 for v in tgt), () if all(v == 0 for v in tgt) else None)
    m = len(tgt)
    if any(len(g) != m for g in gens):
        raise InputError("generator/target dimension mismatch")
    denom = lcm(*[v.denominator for g in gens for v in g],
                *[v.denominator for v in tgt], 1)
    a = IntMatrix.from_rows([[int(v * denom) for v in g] for g in gens])
    t = [int(v * denom) for v in tgt]
    h, u = hermite_row(a)
    # solve y^T H = t by forward substitution on the echelon rows
    y = [0] * h.rows
    residual = list(t)
    for i, row in enumerate(h.entries):
        piv_col = next((j for j, v in enumerate(row) if v != 0), None)
        if piv_col is None:
            continue
        if residual[piv_col] % row[piv_col] != 0:
            return MembershipResult(False, None)
        q = residual[piv_col] // row[piv_col]
        y[i] = q
        if q:
            residual = [x - q * v for x, v in zip(residual, row)]
    if any(v != 0 for v in residual):
        return MembershipResult(False, None)
    coeffs = [0] * a.rows
    for i, yi in enumerate(y):
        if yi:
            for j in range(a.rows):
                coeffs[j] += yi * u.entries[i][j]
    return MembershipResult(True, tuple(coeffs))

"""Partitions, dimensions, centered power sums, and graded bases.

The translation-invariant symmetric polynomials of arity n that are
homogeneous of degree d form a vector space whose dimension equals the number
of partitions of d into integers between 2 and n.  A basis is given by the
products

    basis element for partition L  =  prod_{k in L} centered_power_sum(n, k)

where centered_power_sum(n, k) = sum_i (z_i - mean(z))^k.  Echelonizing such a
basis against the lexicographically ordered multiset columns produces the
pivot monomials that drive the squeezing-order analysis.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .core import (
    Multiset,
    RawPolynomial,
    SymmetricPolynomial,
    collect,
    exponent_multisets,
)

Partition = Tuple[int, ...]


class InvalidPartition(ValueError):
    """A partition part lies outside the permitted range."""


def partitions_in_range(d: int, min_part: int, max_part: int) -> list[Partition]:
    """All partitions of d with parts in [min_part, max_part], descending lex.

    d = 0 yields the empty partition; an infeasible range yields no partitions.
    """
    if d == 0:
        return [()]
    if d < 0 or min_part > max_part or min_part < 1:
        return []
    out: list[Partition] = []

    def rec(rem: int, cap: int, prefix: list[int]) -> None:
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rem, cap), min_part - 1, -1):
            prefix.append(p)
            rec(rem - p, p, prefix)
            prefix.pop()

    rec(d, max_part, [])
    return out


def _series_coefficients(n: int, dmax: int) -> list[int]:
    """Taylor coefficients of prod_{s=2}^n 1/(1 - t^s) up to degree dmax."""
    coeffs = [1] + [0] * dmax
    for s in range(2, n + 1):
        for i in range(s, dmax + 1):
            coeffs[i] += coeffs[i - s]
    return coeffs


def dimension(n: int, d: int) -> int:
    """Dimension of the degree-d graded piece, for arity n.

    Computed two ways (partition enumeration and the generating-function
    coefficient) and cross-checked before returning.
    """
    by_count = len(partitions_in_range(d, 2, n))
    by_series = _series_coefficients(n, d)[d] if d >= 0 else 0
    if by_count != by_series:
        raise RuntimeError(
            f"dimension({n}, {d}): enumeration {by_count} != series {by_series}"
        )
    return by_count


@functools.lru_cache(maxsize=None)
def centered_power_sum(n: int, k: int) -> SymmetricPolynomial:
    """sum_i (z_i - mean(z))^k, expanded exactly and collected.

    Homogeneous of degree k and translation invariant; identically zero for
    k = 1 since the centered variables sum to zero.
    """
    total = RawPolynomial.zero(n)
    for i in range(n):
        lin = RawPolynomial(
            n,
            {
                tuple(1 if j == m else 0 for j in range(n)): (
                    Fraction(n - 1, n) if m == i else Fraction(-1, n)
                )
                for m in range(n)
            },
        )
        power = RawPolynomial.constant(n, 1)
        for _ in range(k):
            power = power * lin
        total = total + power
    return collect(total)


@functools.lru_cache(maxsize=None)
def _basis_element(n: int, parts: Partition) -> SymmetricPolynomial:
    if not parts:
        return SymmetricPolynomial.unit(n)
    return centered_power_sum(n, parts[0]) * _basis_element(n, parts[1:])


def basis_element(n: int, partition: Sequence[int]) -> SymmetricPolynomial:
    """Product of centered power sums, one factor per part of the partition."""
    parts = tuple(sorted(partition, reverse=True))
    for p in parts:
        if not 2 <= p <= n:
            raise InvalidPartition(f"part {p} outside [2, {n}]")
    return _basis_element(n, parts)


@dataclass(frozen=True)
class GradedBasis:
    n: int
    d: int
    labels: Tuple[Partition, ...]
    elements: Tuple[SymmetricPolynomial, ...]


def graded_basis(n: int, d: int) -> GradedBasis:
    """One basis element per partition of d into parts in [2, n], descending lex."""
    labels = tuple(partitions_in_range(d, 2, n))
    elements = tuple(basis_element(n, lam) for lam in labels)
    return GradedBasis(n, d, labels, elements)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over exact rationals.

    Returns the nonzero rows (pivots normalized to 1, pivot columns cleared
    above and below) and the pivot column indices, in order.
    """
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = next((r for r in range(pr, len(mat)) if mat[r][pc]), None)
        if pivot_row is None:
            continue
        mat[pr], mat[pivot_row] = mat[pivot_row], mat[pr]
        inv = 1 / mat[pr][pc]
        mat[pr] = [x * inv for x in mat[pr]]
        for r in range(len(mat)):
            if r != pr and mat[r][pc]:
                f = mat[r][pc]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(mat):
            break
    return mat[:pr], pivots


def nullspace(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} for the matrix M whose rows are given."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][free]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class EchelonBasis:
    n: int
    d: int
    rows: Tuple[SymmetricPolynomial, ...]
    leading: Tuple[Multiset, ...]


def echelonize(basis: GradedBasis) -> EchelonBasis:
    """Reduce the basis against multiset columns ordered descending lex.

    The leading multisets are the pivot columns; they come out strictly
    decreasing lexicographically and number exactly the basis rank.
    """
    columns = exponent_multisets(basis.n, basis.d)
    index = {m: j for j, m in enumerate(columns)}
    matrix = []
    for elt in basis.elements:
        row = [Fraction(0)] * len(columns)
        for m, c in elt.terms.items():
            row[index[m]] = c
        matrix.append(row)
    reduced, pivots = rref(matrix)
    rows = tuple(
        SymmetricPolynomial(basis.n, {columns[j]: c for j, c in enumerate(r) if c})
        for r in reduced
    )
    return EchelonBasis(basis.n, basis.d, rows, tuple(columns[j] for j in pivots))


def special_basis(n: int, d: int) -> list[SymmetricPolynomial]:
    """Fully reduced rows, one per lexicographic maximum; each row's support
    meets the set of maxima exactly in its own pivot.

    Empty for d = 0 to mirror the convention that the constant cell has no
    recorded maxima (see squeeze.lex_maxima_set).
    """
    if d == 0:
        return []
    return list(echelonize(graded_basis(n, d)).rows)

"""Antisymmetric polynomials via multiplication by the Vandermonde determinant.

Every antisymmetric polynomial is a symmetric polynomial times
prod_{i<j} (z_i - z_j), and that product map is a degree-shifting linear
isomorphism: a homogeneous symmetric input of degree d maps to an
antisymmetric output of degree d + n(n-1)/2.  Results stay in the raw
representation; no occupation-style basis is imposed on the antisymmetric
side.
"""

from __future__ import annotations

from .core import RawPolynomial, SymmetricPolynomial

AntisymmetricPolynomial = RawPolynomial


def vandermonde(n: int) -> RawPolynomial:
    """prod_{i<j} (z_i - z_j); the empty product 1 for n = 1."""
    out = RawPolynomial.constant(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            vi = tuple(1 if k == i else 0 for k in range(n))
            vj = tuple(1 if k == j else 0 for k in range(n))
            out = out * RawPolynomial(n, {vi: 1, vj: -1})
    return out


def to_antisymmetric(p: SymmetricPolynomial) -> RawPolynomial:
    """Multiply by the Vandermonde determinant of p's arity."""
    return p.raw() * vandermonde(p.n)


def is_antisymmetric(r: RawPolynomial) -> bool:
    """True iff every adjacent variable transposition negates r."""
    for i in range(r.nvars - 1):
        perm = list(range(r.nvars))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if r.permuted(tuple(perm)) != -r:
            return False
    return True

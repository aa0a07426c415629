"""Translation expansion and the translation-invariance decision procedure.

Shifting every variable by a fresh parameter t turns a polynomial p into
p(z1+t, ..., zn+t), which regroups as sum_i piece_i * t^i with each piece a
polynomial in z alone.  p is translation invariant exactly when every piece
with index >= 1 vanishes.  Pieces are computed by exact binomial expansion of
the raw representation, never by closed-form shortcuts; the classical
trivariate first-piece formula is provided separately as a cross-check.

Normalization note: the trivariate formula

    first piece of [a,b,c]  =  a[a-1,b,c] + b[a,b-1,c] + c[a,b,c-1]

holds verbatim (scalar 1) in the full-symmetrization coefficient convention
of this package, because expanding sum_s (z_{s(1)}+t)^a (z_{s(2)}+t)^b
(z_{s(3)}+t)^c reproduces the same S_3 sums on the decremented exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Tuple

from .core import (
    Multiset,
    RawPolynomial,
    SymmetricPolynomial,
    canonicalize,
    collect,
)


class FormulaDomain(ValueError):
    """Input outside the stated domain of the trivariate closed formula."""


def raw_translation_pieces(r: RawPolynomial) -> list[RawPolynomial]:
    """Expand r(z1+t, ..., zn+t) and return the coefficient of each power of t.

    Index i of the returned list is the z-polynomial multiplying t^i; the list
    has length max total degree + 1 (a single zero entry for the zero input).
    """
    n = r.nvars
    maxdeg = max((sum(v) for v in r.terms), default=0)
    pieces: list[dict[tuple[int, ...], Fraction]] = [{} for _ in range(maxdeg + 1)]
    for v, c in r.terms.items():
        # expand prod_i (z_i + t)^{v_i} one variable at a time
        acc: dict[tuple[tuple[int, ...], int], Fraction] = {((), 0): Fraction(1)}
        for e in v:
            nxt: dict[tuple[tuple[int, ...], int], Fraction] = {}
            for (prefix, tdeg), cc in acc.items():
                for j in range(e + 1):
                    key = (prefix + (e - j,), tdeg + j)
                    nxt[key] = nxt.get(key, Fraction(0)) + cc * comb(e, j)
            acc = nxt
        for (vec, tdeg), cc in acc.items():
            bucket = pieces[tdeg]
            bucket[vec] = bucket.get(vec, Fraction(0)) + c * cc
    return [RawPolynomial(n, bucket) for bucket in pieces]


@dataclass(frozen=True)
class TranslationExpansion:
    """Graded pieces of p(z+t): pieces[i] multiplies t^i, pieces[0] == p."""

    n: int
    pieces: Tuple[SymmetricPolynomial, ...]

    def piece(self, i: int) -> SymmetricPolynomial:
        if 0 <= i < len(self.pieces):
            return self.pieces[i]
        return SymmetricPolynomial.zero(self.n)

    @property
    def is_invariant(self) -> bool:
        return all(p.is_zero for p in self.pieces[1:])


def translate_expand(p: SymmetricPolynomial) -> TranslationExpansion:
    """Exact expansion of p(z1+t, ..., zn+t), re-collected per power of t."""
    raw_pieces = raw_translation_pieces(p.raw())
    return TranslationExpansion(p.n, tuple(collect(r) for r in raw_pieces))


def is_translation_invariant(p: SymmetricPolynomial) -> bool:
    """True iff every piece of index >= 1 vanishes (works for non-homogeneous p)."""
    return translate_expand(p).is_invariant


def raw_is_translation_invariant(r: RawPolynomial) -> bool:
    pieces = raw_translation_pieces(r)
    return all(p.is_zero for p in pieces[1:])


def trivariate_first_piece(m: Multiset) -> SymmetricPolynomial:
    """Closed formula for the first translation piece of one trivariate monomial.

    Stated only for arity 3 with all entries positive; anything else raises
    FormulaDomain rather than guessing how colliding or zero entries behave.
    """
    m = canonicalize(m)
    if len(m) != 3:
        raise FormulaDomain(f"formula is stated for 3 variables, got arity {len(m)}")
    if any(e == 0 for e in m):
        raise FormulaDomain(f"formula is stated for positive exponents, got {m}")
    out: dict[Multiset, Fraction] = {}
    for i, e in enumerate(m):
        dec = list(m)
        dec[i] -= 1
        key = canonicalize(dec)
        out[key] = out.get(key, Fraction(0)) + e
    return SymmetricPolynomial(3, out)

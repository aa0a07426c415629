"""Exact sparse polynomial arithmetic over the rationals, in two representations.

A symmetric polynomial is stored as a map from exponent multisets to nonzero
Fraction coefficients, where the multiset [l1, ..., ln] (weakly decreasing)
stands for the full symmetrization

    [l1, ..., ln] = sum over all n! permutations s of z_{s(1)}^l1 ... z_{s(n)}^ln.

With this convention [5,0,0] denotes 2*z1^5 + 2*z2^5 + 2*z3^5: every distinct
rearrangement of the exponent vector appears with coefficient prod_e mult_e!,
where mult_e counts how often the exponent value e repeats (zeros included).

A raw polynomial is an ordinary sparse polynomial: a map from ordered exponent
vectors to nonzero coefficients.  Raw polynomials carry products, translation
expansions and antisymmetric results, none of which live naturally in the
multiset basis.

All coefficients are exact rationals (fractions.Fraction: always reduced,
positive denominator, zero is 0/1).  No floating point appears anywhere.
Values are immutable after construction; every operation returns a new value,
so everything here is safe to share across threads.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple

Multiset = Tuple[int, ...]
Vector = Tuple[int, ...]


class InvalidExponent(ValueError):
    """An exponent entry is negative or otherwise not a natural number."""


class ArityMismatch(ValueError):
    """Two polynomials over different variable counts were combined."""


class NotSymmetric(ValueError):
    """A raw polynomial expected to be symmetric is not."""


def canonicalize(exponents: Iterable[int]) -> Multiset:
    """Sort an exponent list weakly decreasing, validating entries are naturals."""
    v = tuple(exponents)
    for e in v:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise InvalidExponent(f"exponent entries must be naturals, got {e!r}")
    return tuple(sorted(v, reverse=True))


def multiplicity_factor(m: Multiset) -> int:
    """prod_e mult_e! over the distinct exponent values of m (zeros included)."""
    f = 1
    for e in set(m):
        f *= math.factorial(m.count(e))
    return f


def distinct_rearrangements(m: Multiset) -> Iterator[Vector]:
    seen = set()
    for v in itertools.permutations(m):
        if v not in seen:
            seen.add(v)
            yield v


def exponent_multisets(n: int, d: int) -> list[Multiset]:
    """All weakly decreasing n-vectors of naturals summing to d, descending lex."""
    out: list[Multiset] = []

    def rec(rem: int, cap: int, prefix: list[int]) -> None:
        if len(prefix) == n:
            if rem == 0:
                out.append(tuple(prefix))
            return
        for p in range(min(rem, cap), -1, -1):
            prefix.append(p)
            rec(rem - p, p, prefix)
            prefix.pop()

    if n >= 0 and d >= 0:
        rec(d, d, [])
    return out


class DegreeInfo(NamedTuple):
    homogeneous: bool
    degree: Optional[int]


def _degree_info(keys: Iterable[Tuple[int, ...]]) -> DegreeInfo:
    degrees = {sum(k) for k in keys}
    if not degrees:
        # zero polynomial: homogeneous of every degree, so no single degree
        return DegreeInfo(True, None)
    if len(degrees) == 1:
        return DegreeInfo(True, degrees.pop())
    return DegreeInfo(False, None)


class RawPolynomial:
    """Sparse polynomial over ordered exponent vectors of a fixed length."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Vector, Fraction | int] | None = None):
        cleaned: dict[Vector, Fraction] = {}
        for v, c in (terms or {}).items():
            v = tuple(v)
            if len(v) != nvars:
                raise ArityMismatch(f"vector {v} has length {len(v)}, expected {nvars}")
            for e in v:
                if e < 0:
                    raise InvalidExponent(f"negative exponent in {v}")
            c = Fraction(c)
            if c:
                cleaned[v] = c
        self.nvars = nvars
        self.terms = cleaned

    @classmethod
    def zero(cls, nvars: int) -> "RawPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Fraction | int) -> "RawPolynomial":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, v: Vector) -> Fraction:
        return self.terms.get(tuple(v), Fraction(0))

    def degree_info(self) -> DegreeInfo:
        return _degree_info(self.terms)

    def _check_arity(self, other: "RawPolynomial") -> None:
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} variables vs {other.nvars}")

    def __add__(self, other: "RawPolynomial") -> "RawPolynomial":
        self._check_arity(other)
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = out.get(v, Fraction(0)) + c
        return RawPolynomial(self.nvars, out)

    def __neg__(self) -> "RawPolynomial":
        return RawPolynomial(self.nvars, {v: -c for v, c in self.terms.items()})

    def __sub__(self, other: "RawPolynomial") -> "RawPolynomial":
        return self + (-other)

    def scale(self, c: Fraction | int) -> "RawPolynomial":
        c = Fraction(c)
        return RawPolynomial(self.nvars, {v: c * x for v, x in self.terms.items()})

    def __mul__(self, other: "RawPolynomial") -> "RawPolynomial":
        self._check_arity(other)
        out: dict[Vector, Fraction] = {}
        for va, ca in self.terms.items():
            for vb, cb in other.terms.items():
                k = tuple(x + y for x, y in zip(va, vb))
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return RawPolynomial(self.nvars, out)

    def permuted(self, perm: Tuple[int, ...]) -> "RawPolynomial":
        """Apply the variable relabeling z_i -> z_perm(i) (perm is 0-indexed)."""
        out: dict[Vector, Fraction] = {}
        for v, c in self.terms.items():
            w = [0] * self.nvars
            for i, e in enumerate(v):
                w[perm[i]] = e
            out[tuple(w)] = c
        return RawPolynomial(self.nvars, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RawPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"RawPolynomial({self.nvars}, 0)"
        bits = [f"{c}*z^{v}" for v, c in sorted(self.terms.items(), reverse=True)]
        return f"RawPolynomial({self.nvars}, {' + '.join(bits)})"


def symmetrize(m: Multiset) -> RawPolynomial:
    """Expand the symmetrized monomial [m]: the sum over all n! permutations.

    Enumerates distinct rearrangements once each with the multiplicity factor
    prod_e mult_e!, which gives the same polynomial as the full n!-term sum.
    """
    m = canonicalize(m)
    c = Fraction(multiplicity_factor(m))
    return RawPolynomial(len(m), {v: c for v in distinct_rearrangements(m)})


class SymmetricPolynomial:
    """Finite Fraction-linear combination of symmetrized monomials of one arity."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Multiset, Fraction | int] | None = None):
        cleaned: dict[Multiset, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ArityMismatch(f"multiset {m} has arity {len(m)}, expected {n}")
            if any(e < 0 for e in m):
                raise InvalidExponent(f"negative exponent in {m}")
            if list(m) != sorted(m, reverse=True):
                raise InvalidExponent(f"multiset {m} is not weakly decreasing")
            c = Fraction(c)
            if c:
                cleaned[m] = c
        self.n = n
        self.terms = cleaned

    @classmethod
    def zero(cls, n: int) -> "SymmetricPolynomial":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "SymmetricPolynomial":
        """The multiplicative identity: (1/n!) * [0, ..., 0]."""
        return cls(n, {(0,) * n: Fraction(1, math.factorial(n))})

    @classmethod
    def monomial(cls, m: Iterable[int], c: Fraction | int = 1) -> "SymmetricPolynomial":
        m = canonicalize(m)
        return cls(len(m), {m: Fraction(c)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> Tuple[Multiset, ...]:
        """The multisets with nonzero coefficient, descending lex."""
        return tuple(sorted(self.terms, reverse=True))

    def coefficient(self, m: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def degree_info(self) -> DegreeInfo:
        return _degree_info(self.terms)

    def _check_arity(self, other: "SymmetricPolynomial") -> None:
        if self.n != other.n:
            raise ArityMismatch(f"arity {self.n} vs {other.n}")

    def __add__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        self._check_arity(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SymmetricPolynomial(self.n, out)

    def __neg__(self) -> "SymmetricPolynomial":
        return SymmetricPolynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        return self + (-other)

    def scale(self, c: Fraction | int) -> "SymmetricPolynomial":
        c = Fraction(c)
        return SymmetricPolynomial(self.n, {m: c * x for m, x in self.terms.items()})

    def raw(self) -> RawPolynomial:
        """Full expansion into the ordered-vector representation."""
        out: dict[Vector, Fraction] = {}
        for m, c in self.terms.items():
            f = c * multiplicity_factor(m)
            for v in distinct_rearrangements(m):
                out[v] = out.get(v, Fraction(0)) + f
        return RawPolynomial(self.n, out)

    def __mul__(self, other):
        if isinstance(other, SymmetricPolynomial):
            return self._poly_mul(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def _poly_mul(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        """Product via raw expansion, collected back to multiset coefficients.

        Only one factor is fully symmetrized.  Writing p = sum_M a_M [M] and
        letting P = sum_M a_M z^M keep one representative monomial per term,
        p = sum_{s in S_n} s(P), so p*q = sum_s s(P * raw(q)) because raw(q)
        is itself S_n-invariant.  Sorting the exponent vectors of P * raw(q)
        therefore yields the multiset coefficients of the product directly,
        which saves the n!-fold redundancy of expanding both sides.
        """
        self._check_arity(other)
        lead, full = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        rawq = full.raw()
        out: dict[Multiset, Fraction] = {}
        for m, a in lead.terms.items():
            for v, b in rawq.terms.items():
                k = tuple(sorted((x + y for x, y in zip(m, v)), reverse=True))
                out[k] = out.get(k, Fraction(0)) + a * b
        return SymmetricPolynomial(self.n, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymmetricPolynomial({self.n}, 0)"
        bits = []
        for m in self.support:
            c = self.terms[m]
            bits.append(f"{c}*[{','.join(map(str, m))}]")
        return f"SymmetricPolynomial({self.n}, {' + '.join(bits)})"


def collect(r: RawPolynomial) -> SymmetricPolynomial:
    """Invert symmetrize: rewrite a symmetric raw polynomial in the multiset basis.

    Verifies symmetry orbit by orbit: every rearrangement of each exponent
    vector must be present with equal coefficient.  Raises NotSymmetric
    otherwise.
    """
    n = r.nvars
    orbits: dict[Multiset, list[Fraction]] = {}
    for v, c in r.terms.items():
        orbits.setdefault(tuple(sorted(v, reverse=True)), []).append(c)
    nfact = math.factorial(n)
    out: dict[Multiset, Fraction] = {}
    for m, coeffs in orbits.items():
        f = multiplicity_factor(m)
        if len(coeffs) != nfact // f or any(c != coeffs[0] for c in coeffs[1:]):
            raise NotSymmetric(f"orbit of {m} is not permutation invariant")
        out[m] = coeffs[0] / f
    return SymmetricPolynomial(n, out)

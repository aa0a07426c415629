"""The squeezing order on symmetrized monomials and the Haldane property.

Squeezing a multiset [l1, ..., ln] means decrementing some l_i and
incrementing some l_j where l_i > l_j + 1; the squeezing order puts s > t iff
t arises from s by repeated squeezing.  A homogeneous symmetric polynomial is
Haldane when the poset of its support multisets has a maximum.

The comparator used everywhere is the dominance test (every prefix sum of s
at least the corresponding prefix sum of t, both sorted descending).  Its
equivalence with breadth-first squeeze reachability is a classical fact that
this package does not take on faith: squeeze_closure is the independent
oracle, and the test suite checks the two agree exhaustively on every
same-degree pair up to arity 5 and degree 12 before the shortcut is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .basis import echelonize, graded_basis
from .core import Multiset, SymmetricPolynomial, exponent_multisets

Cover = Tuple[Multiset, Multiset]  # (smaller, bigger)


class IncomparableDomains(ValueError):
    """Order comparisons require equal arity and equal degree."""


class EmptySupport(ValueError):
    """The zero polynomial has no squeezing poset."""


class NotHomogeneous(ValueError):
    """Squeezing preserves degree, so only homogeneous polynomials qualify."""


def _check_domain(s: Multiset, t: Multiset) -> None:
    if len(s) != len(t):
        raise IncomparableDomains(f"arity {len(s)} vs {len(t)}")
    if sum(s) != sum(t):
        raise IncomparableDomains(f"degree {sum(s)} vs {sum(t)}")


def lex_compare(s: Multiset, t: Multiset) -> int:
    """-1, 0 or 1 as s is lex smaller, equal, or bigger than t."""
    _check_domain(s, t)
    if s == t:
        return 0
    return 1 if s > t else -1


def single_squeezes(s: Multiset) -> set[Multiset]:
    """All distinct results of one legal squeeze of s, canonicalized."""
    out: set[Multiset] = set()
    n = len(s)
    for i in range(n):
        for j in range(n):
            if s[i] > s[j] + 1:
                v = list(s)
                v[i] -= 1
                v[j] += 1
                out.add(tuple(sorted(v, reverse=True)))
    return out


def squeeze_closure(s: Multiset) -> set[Multiset]:
    """Everything reachable from s by repeated squeezing, s included (BFS oracle)."""
    seen = {s}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for v in single_squeezes(u):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def squeeze_leq(t: Multiset, s: Multiset) -> bool:
    """True iff t is obtainable from s by repeated squeezing (i.e. s >= t).

    Decided by the dominance prefix-sum test; see the module docstring for how
    the equivalence with BFS reachability is validated.
    """
    _check_domain(s, t)
    ps = pt = 0
    for a, b in zip(s, t):
        ps += a
        pt += b
        if ps < pt:
            return False
    return True


@dataclass(frozen=True)
class SqueezePoset:
    """Support multisets of one polynomial under the squeezing order.

    covers holds the transitive reduction of the order induced on the node
    set: (smaller, bigger) pairs with no third node strictly between them.
    """

    nodes: Tuple[Multiset, ...]
    covers: Tuple[Cover, ...]


def support_poset(p: SymmetricPolynomial) -> SqueezePoset:
    if p.is_zero:
        raise EmptySupport("zero polynomial has no support poset")
    homogeneous, _ = p.degree_info()
    if not homogeneous:
        raise NotHomogeneous("support poset requires a homogeneous polynomial")
    nodes = p.support
    below = {
        s: {t for t in nodes if t != s and squeeze_leq(t, s)} for s in nodes
    }
    covers = []
    for s in nodes:
        for t in below[s]:
            if not any(t in below[w] for w in below[s] if w != t):
                covers.append((t, s))
    covers.sort(reverse=True)
    return SqueezePoset(nodes, tuple(covers))


def maximal_elements(poset: SqueezePoset) -> set[Multiset]:
    """Nodes with no strictly bigger node: never the smaller end of a cover."""
    if not poset.nodes:
        raise EmptySupport("empty poset has no maximal elements")
    smaller_ends = {t for t, _ in poset.covers}
    return {s for s in poset.nodes if s not in smaller_ends}


def is_haldane(p: SymmetricPolynomial) -> bool:
    """True iff the squeezing poset of p's support has a (unique) maximum."""
    return len(maximal_elements(support_poset(p))) == 1


def is_completely_squeezable(s: Multiset) -> bool:
    """True iff s squeeze-dominates every lex-smaller multiset of its degree."""
    n, d = len(s), sum(s)
    return all(squeeze_leq(t, s) for t in exponent_multisets(n, d) if t < s)


@dataclass(frozen=True)
class LexMaximaSet:
    n: int
    d: int
    maxima: Tuple[Multiset, ...]  # descending lex


def lex_maxima_set(n: int, d: int) -> LexMaximaSet:
    """Lexicographic maxima of support posets over the whole graded piece.

    Computed as the pivot multisets of the echelonized graded basis.  The
    d = 0 cell is empty by convention: the constant polynomials are excluded
    from the enumeration even though the graded piece is one-dimensional.
    """
    if d == 0:
        return LexMaximaSet(n, d, ())
    ech = echelonize(graded_basis(n, d))
    return LexMaximaSet(n, d, ech.leading)


@dataclass(frozen=True)
class ConjectureStatus:
    """Verdict of the squeezability lemma for one (arity, degree) cell.

    holds_by_lemma: every lex maximum is completely squeezable, which is
    sufficient for every polynomial of the cell to be Haldane.
    incomparable_pair: two lex maxima incomparable under squeezing, which
    refutes the conjecture for the cell.  Neither set means the lemma is
    inconclusive for the cell ("undecided").
    """

    n: int
    d: int
    holds_by_lemma: bool
    incomparable_pair: Optional[Tuple[Multiset, Multiset]]

    @property
    def status(self) -> str:
        if self.holds_by_lemma:
            return "holds"
        if self.incomparable_pair is not None:
            return "refuted"
        return "undecided"


def conjecture_status(n: int, d: int) -> ConjectureStatus:
    maxima = lex_maxima_set(n, d).maxima
    if all(is_completely_squeezable(s) for s in maxima):
        return ConjectureStatus(n, d, True, None)
    for i in range(len(maxima)):
        for j in range(i + 1, len(maxima)):
            s, t = maxima[i], maxima[j]
            if not squeeze_leq(t, s) and not squeeze_leq(s, t):
                return ConjectureStatus(n, d, False, (s, t))
    return ConjectureStatus(n, d, False, None)


def construct_counterexample(n: int, d: int) -> Optional[SymmetricPolynomial]:
    """Build a non-Haldane translation-invariant polynomial for the cell, if any.

    With an incomparable pair m1 >lex m2 among the lex maxima, take the fully
    reduced rows p1, p2 pivoted at m1 and m2 and return q = p1 + c*p2 where c
    avoids cancelling the coefficient of m2 (c = 1 unless that collides, then
    c = 2).  Both m1 and m2 are then maximal in the support of q, so q is not
    Haldane, while translation invariance is inherited from the row space.
    """
    status = conjecture_status(n, d)
    if status.incomparable_pair is None:
        return None
    m1, m2 = status.incomparable_pair
    ech = echelonize(graded_basis(n, d))
    by_pivot = dict(zip(ech.leading, ech.rows))
    p1, p2 = by_pivot[m1], by_pivot[m2]
    c1 = p1.coefficient(m2)
    c2 = p2.coefficient(m2)
    c = Fraction(1) if Fraction(1) != -c1 / c2 else Fraction(2)
    return p1 + p2.scale(c)


def hasse_dot(poset: SqueezePoset) -> str:
    """Deterministic DOT digraph of the poset; arrows point smaller -> bigger."""
    lines = ["digraph squeeze {"]
    for m in sorted(poset.nodes, reverse=True):
        lines.append(f'  "{_label(m)}";')
    for t, s in sorted(poset.covers, reverse=True):
        lines.append(f'  "{_label(t)}" -> "{_label(s)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _label(m: Multiset) -> str:
    return "[" + ",".join(map(str, m)) + "]"

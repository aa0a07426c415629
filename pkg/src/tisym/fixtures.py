"""Bundled reference polynomial: the minimal quadrivariate counterexample.

This explicit 29-term polynomial of arity 4 and homogeneous degree 14 is
translation invariant but not Haldane: its support poset has the two maximal
elements [8,4,2,0] and [7,7,0,0].  It is minimal in the sense that every
quadrivariate cell of lower degree, and every cell of arity at most 3,
satisfies the conjecture.  The verify-counterexample command re-derives all
of these properties from scratch.
"""

from __future__ import annotations

from .core import SymmetricPolynomial

MINIMAL_COUNTEREXAMPLE_TERMS: tuple[tuple[tuple[int, int, int, int], int], ...] = (
    ((8, 4, 2, 0), 3),
    ((8, 4, 1, 1), -3),
    ((8, 3, 3, 0), -3),
    ((8, 3, 2, 1), 6),
    ((8, 2, 2, 2), -3),
    ((7, 7, 0, 0), 3),
    ((7, 6, 1, 0), -42),
    ((7, 5, 2, 0), 46),
    ((7, 5, 1, 1), 80),
    ((7, 4, 3, 0), -22),
    ((7, 4, 2, 1), -188),
    ((7, 3, 3, 1), 112),
    ((7, 3, 2, 2), 8),
    ((6, 6, 2, 0), 77),
    ((6, 6, 1, 1), 70),
    ((6, 5, 3, 0), -182),
    ((6, 5, 2, 1), -700),
    ((6, 4, 4, 0), 112),
    ((6, 4, 3, 1), 168),
    ((6, 4, 2, 2), 1078),
    ((6, 3, 3, 2), -728),
    ((5, 5, 4, 0), 5),
    ((5, 5, 3, 1), 1072),
    ((5, 5, 2, 2), 246),
    ((5, 4, 4, 1), -722),
    ((5, 4, 3, 2), -2976),
    ((5, 3, 3, 3), 1808),
    ((4, 4, 4, 2), 1805),
    ((4, 4, 3, 3), -1130),
)


def minimal_counterexample() -> SymmetricPolynomial:
    """The bundled 29-term non-Haldane polynomial (arity 4, degree 14)."""
    return SymmetricPolynomial(4, dict(MINIMAL_COUNTEREXAMPLE_TERMS))

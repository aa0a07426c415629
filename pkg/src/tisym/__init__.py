"""Exact arithmetic for translation-invariant symmetric polynomials.

Builds the centered-power-sum basis of each graded piece, decides translation
invariance and the Haldane property (a unique maximum in the squeezing poset
of the support), computes lexicographic-maxima sets, and constructs and
verifies counterexamples to the conjecture that every homogeneous translation
invariant symmetric polynomial is Haldane.
"""

from .core import (
    ArityMismatch,
    DegreeInfo,
    InvalidExponent,
    NotSymmetric,
    RawPolynomial,
    SymmetricPolynomial,
    canonicalize,
    collect,
    exponent_multisets,
    symmetrize,
)
from .invariance import (
    FormulaDomain,
    TranslationExpansion,
    is_translation_invariant,
    raw_is_translation_invariant,
    translate_expand,
    trivariate_first_piece,
)
from .basis import (
    EchelonBasis,
    GradedBasis,
    InvalidPartition,
    basis_element,
    centered_power_sum,
    dimension,
    echelonize,
    graded_basis,
    partitions_in_range,
    special_basis,
)
from .squeeze import (
    ConjectureStatus,
    EmptySupport,
    IncomparableDomains,
    LexMaximaSet,
    NotHomogeneous,
    SqueezePoset,
    conjecture_status,
    construct_counterexample,
    hasse_dot,
    is_completely_squeezable,
    is_haldane,
    lex_compare,
    lex_maxima_set,
    maximal_elements,
    single_squeezes,
    squeeze_closure,
    squeeze_leq,
    support_poset,
)
from .antisym import is_antisymmetric, to_antisymmetric, vandermonde
from .fixtures import minimal_counterexample

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "ConjectureStatus",
    "DegreeInfo",
    "EchelonBasis",
    "EmptySupport",
    "FormulaDomain",
    "GradedBasis",
    "IncomparableDomains",
    "InvalidExponent",
    "InvalidPartition",
    "LexMaximaSet",
    "NotHomogeneous",
    "NotSymmetric",
    "RawPolynomial",
    "SqueezePoset",
    "SymmetricPolynomial",
    "TranslationExpansion",
    "basis_element",
    "canonicalize",
    "centered_power_sum",
    "collect",
    "conjecture_status",
    "construct_counterexample",
    "dimension",
    "echelonize",
    "exponent_multisets",
    "graded_basis",
    "hasse_dot",
    "is_antisymmetric",
    "is_completely_squeezable",
    "is_haldane",
    "is_translation_invariant",
    "lex_compare",
    "lex_maxima_set",
    "maximal_elements",
    "minimal_counterexample",
    "partitions_in_range",
    "raw_is_translation_invariant",
    "single_squeezes",
    "special_basis",
    "squeeze_closure",
    "squeeze_leq",
    "support_poset",
    "symmetrize",
    "to_antisymmetric",
    "translate_expand",
    "trivariate_first_piece",
    "vandermonde",
]

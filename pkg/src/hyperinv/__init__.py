"""Exact toolkit for hyperelliptic curves with extra involutions.

Detection of extra involutions by degree-2 polynomial decomposition, dihedral
invariants computed without root extraction, isomorphism of (curve,
involution) pairs, automorphism structure from invariant relations, and
rational models over the field of moduli.  All core paths are exact over Q;
floating point appears only in the optional numeric involution search and in
test oracles.
"""

from .classify import (
    ClassificationReport,
    classify,
    curves_isomorphic_with_involution,
    invariants_of_curve,
    lift_factor_sign,
    v4_condition,
)
from .domains import GF, QQ, PrimeField, PrimeFieldElement, Rational, primitive_nth_root
from .errors import (
    DegenerateCurveError,
    DegenerateLocusError,
    DegenerateModelError,
    DomainMismatchError,
    HyperinvError,
    InvalidBoundError,
    InvalidComparisonError,
    InvalidDegreeError,
    InvalidRootError,
    NotApplicableError,
    NotInLocusError,
    NotNormalizableError,
    NumericFailureError,
    PreconditionError,
    UndefinedResultantError,
    VerificationError,
)
from .invariants import (
    DihedralInvariants,
    NormalForm,
    dihedral_invariants,
    invariants_equal,
    invariants_from_even,
    relation_check,
    tau1,
    tau2,
)
from .involution import (
    DecompositionWitness,
    EvenForm,
    HyperellipticCurve,
    MoebiusInvolution,
    decompose_degree2,
    even_degree_model,
    even_shift_candidate,
    has_extra_involution_rational,
    normalize_poly_to_even,
    normalize_to_even,
    search_involutions_numeric,
)
from .models import (
    FAMILIES,
    UNVERIFIED_FAMILIES,
    build_model,
    model_g2,
    model_g3,
    model_generic_v4,
    rat_mod_identity_value,
    verify_model,
)
from .poly import Poly, polynomial_from_pairs

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "DecompositionWitness",
    "DegenerateCurveError",
    "DegenerateLocusError",
    "DegenerateModelError",
    "DihedralInvariants",
    "DomainMismatchError",
    "EvenForm",
    "FAMILIES",
    "GF",
    "HyperellipticCurve",
    "HyperinvError",
    "InvalidBoundError",
    "InvalidComparisonError",
    "InvalidDegreeError",
    "InvalidRootError",
    "MoebiusInvolution",
    "NormalForm",
    "NotApplicableError",
    "NotInLocusError",
    "NotNormalizableError",
    "NumericFailureError",
    "Poly",
    "PreconditionError",
    "PrimeField",
    "PrimeFieldElement",
    "QQ",
    "Rational",
    "UNVERIFIED_FAMILIES",
    "UndefinedResultantError",
    "VerificationError",
    "build_model",
    "classify",
    "curves_isomorphic_with_involution",
    "decompose_degree2",
    "dihedral_invariants",
    "even_degree_model",
    "even_shift_candidate",
    "has_extra_involution_rational",
    "invariants_equal",
    "invariants_from_even",
    "invariants_of_curve",
    "lift_factor_sign",
    "model_g2",
    "model_g3",
    "model_generic_v4",
    "normalize_poly_to_even",
    "normalize_to_even",
    "polynomial_from_pairs",
    "primitive_nth_root",
    "rat_mod_identity_value",
    "relation_check",
    "search_involutions_numeric",
    "tau1",
    "tau2",
    "v4_condition",
    "verify_model",
]

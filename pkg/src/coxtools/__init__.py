"""Coxeter diagram toolkit: classification, hyperbolicity, enumeration."""

from .core import (
    INFINITY,
    CoxeterSystem,
    Label,
    ValidationResult,
    components,
    is_connected,
    is_crystallographic,
    is_simply_laced,
    label_text,
    restrict,
    validate,
)
from .catalog import cycle_system, path_system, standard_system
from .classify import (
    INDEFINITE,
    Signature,
    ThresholdResult,
    TypeClass,
    UndecidedSignature,
    classify,
    classify_irreducible,
    gram_matrix,
    has_affine_parabolic,
    is_k_spherical,
    is_spherical,
    kazhdan_threshold,
    max_spherical_rank,
    signature,
)
from .hyperbolic import (
    AffineCriterionCheck,
    AffineSearchResult,
    AffineSubset,
    CommutingInfinitePair,
    HyperbolicityVerdict,
    affine_from_commuting,
    check_affine_criterion,
    is_hyperbolic,
    validate_witness,
)
from .enumeration import (
    RANK_CAP,
    EnumFilter,
    canonical_code,
    enumerate_diagrams,
    enumerate_minimal_infinite,
    enumerate_quasi_minimal,
    minimal_infinite_subsets,
    system_from_code,
)
from .experiments import (
    verify_affine_criterion,
    verify_engine_agreement,
    verify_size_bounds,
)
from .report import TOOL_VERSION, Report

__version__ = TOOL_VERSION

__all__ = [
    "INFINITY",
    "Label",
    "CoxeterSystem",
    "ValidationResult",
    "validate",
    "restrict",
    "components",
    "is_connected",
    "is_simply_laced",
    "is_crystallographic",
    "label_text",
    "path_system",
    "cycle_system",
    "standard_system",
    "TypeClass",
    "INDEFINITE",
    "Signature",
    "UndecidedSignature",
    "classify",
    "classify_irreducible",
    "gram_matrix",
    "signature",
    "is_spherical",
    "is_k_spherical",
    "has_affine_parabolic",
    "max_spherical_rank",
    "ThresholdResult",
    "kazhdan_threshold",
    "AffineSubset",
    "CommutingInfinitePair",
    "HyperbolicityVerdict",
    "is_hyperbolic",
    "validate_witness",
    "AffineCriterionCheck",
    "check_affine_criterion",
    "AffineSearchResult",
    "affine_from_commuting",
    "RANK_CAP",
    "EnumFilter",
    "canonical_code",
    "system_from_code",
    "enumerate_diagrams",
    "minimal_infinite_subsets",
    "enumerate_minimal_infinite",
    "enumerate_quasi_minimal",
    "verify_affine_criterion",
    "verify_engine_agreement",
    "verify_size_bounds",
    "Report",
    "TOOL_VERSION",
    "__version__",
]

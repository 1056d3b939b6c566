from siltinglib.approx.approximation import (
    ApproximationResult,
    basic_summands,
    has_approximation_property,
    left_add_approximation,
    minimalise,
)
from siltinglib.approx.bongartz import (
    CompletedPair,
    NotPresilting,
    VerificationFailed,
    bongartz_complete,
    verify_completion,
)
from siltinglib.approx.complexes import (
    LiftFailure,
    cone_presentation,
    d_sigma_membership,
    homotopy_invariants_agree,
    is_presilting,
    presentation_of_sum,
    prune,
    shifted_hom_basis,
    x_sigma_membership,
)

__all__ = [
    "ApproximationResult",
    "CompletedPair",
    "LiftFailure",
    "NotPresilting",
    "VerificationFailed",
    "basic_summands",
    "bongartz_complete",
    "cone_presentation",
    "d_sigma_membership",
    "has_approximation_property",
    "homotopy_invariants_agree",
    "is_presilting",
    "left_add_approximation",
    "minimalise",
    "presentation_of_sum",
    "prune",
    "shifted_hom_basis",
    "verify_completion",
    "x_sigma_membership",
]

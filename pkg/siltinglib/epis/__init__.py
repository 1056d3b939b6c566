from siltinglib.epis.census import CensusRow, diagram_commutes, epiclass_census, ring_epi_from_node
from siltinglib.epis.ring import (
    UNIVERSALITY_NOTE,
    EpiFlags,
    RingEpiPresentation,
    StructureAlgebra,
    idempotent_quotient,
    in_essential_image,
    is_ring_hom,
    is_sigma_inverting,
    presentation_from_reflection,
    surjection_witness,
    verify_ring_epi,
)
from siltinglib.epis.tower import (
    DEFAULT_TOWER_STEPS,
    TowerDiverged,
    ext1_representatives,
    universal_extension,
    wide_projective,
)

__all__ = [
    "CensusRow",
    "DEFAULT_TOWER_STEPS",
    "EpiFlags",
    "RingEpiPresentation",
    "StructureAlgebra",
    "TowerDiverged",
    "UNIVERSALITY_NOTE",
    "diagram_commutes",
    "epiclass_census",
    "ext1_representatives",
    "idempotent_quotient",
    "in_essential_image",
    "is_ring_hom",
    "is_sigma_inverting",
    "presentation_from_reflection",
    "ring_epi_from_node",
    "surjection_witness",
    "universal_extension",
    "verify_ring_epi",
    "wide_projective",
]

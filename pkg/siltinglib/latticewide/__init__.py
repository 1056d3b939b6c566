from siltinglib.latticewide.hasse import (
    BrickLabel,
    HasseDiagram,
    LabelNotFound,
    NotComplete,
    brick_label,
    gen_leq,
    hasse,
    node_index,
    semibrick_at,
    semibrick_of,
)
from siltinglib.latticewide.wide import (
    DEFAULT_DEPTH_CAP,
    DepthExceeded,
    WidePredicate,
    a_map_membership,
    a_map_raw,
    filtgen_membership_bounded,
    torsion_class_members,
    wide_subcategory,
)

__all__ = [
    "DEFAULT_DEPTH_CAP",
    "BrickLabel",
    "DepthExceeded",
    "HasseDiagram",
    "LabelNotFound",
    "NotComplete",
    "WidePredicate",
    "a_map_membership",
    "a_map_raw",
    "brick_label",
    "filtgen_membership_bounded",
    "gen_leq",
    "hasse",
    "node_index",
    "semibrick_at",
    "semibrick_of",
    "torsion_class_members",
    "wide_subcategory",
]

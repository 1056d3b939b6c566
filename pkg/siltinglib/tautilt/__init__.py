from siltinglib.tautilt.exchange import (
    COMPLETE,
    DEFAULT_MAX_DIM,
    DEFAULT_MAX_NODES,
    TRUNCATED,
    Edge,
    ExchangeGraph,
    Finite,
    GkeyCollision,
    Inconclusive,
    decide_tau_tilting_finite,
    exchange_graph,
)
from siltinglib.tautilt.mutation import (
    MutationFailed,
    bongartz_pair,
    co_bongartz_pair,
    exchanged_position,
    mutate,
)
from siltinglib.tautilt.pair import (
    SiltingPair,
    Validation,
    is_tau_rigid,
    pool_disagreements,
    silting_to_presentation,
    validate_pair,
)

__all__ = [
    "COMPLETE",
    "DEFAULT_MAX_DIM",
    "DEFAULT_MAX_NODES",
    "TRUNCATED",
    "Edge",
    "ExchangeGraph",
    "Finite",
    "GkeyCollision",
    "Inconclusive",
    "MutationFailed",
    "SiltingPair",
    "Validation",
    "bongartz_pair",
    "co_bongartz_pair",
    "decide_tau_tilting_finite",
    "exchange_graph",
    "exchanged_position",
    "is_tau_rigid",
    "mutate",
    "pool_disagreements",
    "silting_to_presentation",
    "validate_pair",
]

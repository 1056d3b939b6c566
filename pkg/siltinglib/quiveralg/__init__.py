from siltinglib.quiveralg.algebra import (
    DEFAULT_MAX_PATH_LENGTH,
    BasedAlgebra,
    Element,
    NonAdmissible,
    build_based_algebra,
    multiply,
)
from siltinglib.quiveralg.quiver import Arrow, MalformedRelation, Path, PathExpr, Quiver

__all__ = [
    "DEFAULT_MAX_PATH_LENGTH",
    "Arrow",
    "BasedAlgebra",
    "Element",
    "MalformedRelation",
    "NonAdmissible",
    "Path",
    "PathExpr",
    "Quiver",
    "build_based_algebra",
    "multiply",
]

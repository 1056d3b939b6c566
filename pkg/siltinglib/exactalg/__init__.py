from siltinglib.exactalg.field import FieldSpec
from siltinglib.exactalg.linalg import (
    EchelonBasis,
    Matrix,
    column_space,
    complement_indices,
    inverse,
    kernel_basis,
    left_kernel,
    rank,
    rref,
    solve,
    solve_vector,
    span_rank,
)
from siltinglib.exactalg.polynomial import (
    DegreeCapExceeded,
    characteristic_polynomial,
    evaluate,
    minimal_polynomial_and_factor,
    primary_decomposition,
    single_eigenvalue,
)

__all__ = [
    "DegreeCapExceeded",
    "EchelonBasis",
    "FieldSpec",
    "Matrix",
    "characteristic_polynomial",
    "column_space",
    "complement_indices",
    "evaluate",
    "inverse",
    "kernel_basis",
    "left_kernel",
    "minimal_polynomial_and_factor",
    "primary_decomposition",
    "rank",
    "rref",
    "single_eigenvalue",
    "solve",
    "solve_vector",
    "span_rank",
]

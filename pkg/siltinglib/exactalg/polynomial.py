from __future__ import annotations

import logging
from typing import List, Tuple

from sympy import Poly, Symbol

from siltinglib.exactalg.field import FieldSpec
from siltinglib.exactalg.linalg import Matrix, kernel_basis, rank

_x = Symbol("x")

DEFAULT_DEGREE_CAP = 60


class DegreeCapExceeded(Exception):
    """Raised when a characteristic polynomial would exceed the configured degree."""

    def __init__(self, degree: int, cap: int):
        super().__init__(f"degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


def _to_poly(field: FieldSpec, coefficients) -> Poly:
    K = field.domain
    values = [K.to_sympy(c) for c in coefficients]
    if field.kind == "prime":
        return Poly(values, _x, modulus=field.p)
    return Poly(values, _x, domain="QQ")


def characteristic_polynomial(m: Matrix, degree_cap: int = DEFAULT_DEGREE_CAP) -> Poly:
    if m.nrows != m.ncols:
        raise ValueError(f"characteristic polynomial needs a square matrix, got {m.shape}")
    if m.nrows > degree_cap:
        raise DegreeCapExceeded(m.nrows, degree_cap)
    if m.nrows == 0:
        return _to_poly(m.field, [m.field.one])
    return _to_poly(m.field, m.to_domain_matrix().charpoly())


def evaluate(poly: Poly, m: Matrix) -> Matrix:
    """Horner evaluation of ``poly`` at the square matrix ``m``."""
    field = m.field
    result = Matrix.zeros(field, m.nrows, m.ncols)
    identity = Matrix.identity(field, m.nrows)
    for c in poly.all_coeffs():
        result = result @ m + identity.scale(field(c))
    return result


def _factor_key(item):
    factor, _ = item
    return factor.degree(), str(factor.as_expr())


def minimal_polynomial_and_factor(m: Matrix, degree_cap: int = DEFAULT_DEGREE_CAP) -> List[Tuple[Poly, int]]:
    """
    The monic irreducible factors of the minimal polynomial of ``m`` with their
    multiplicities, in a canonical order (degree, then printed form).
    """
    char = characteristic_polynomial(m, degree_cap)
    if char.degree() <= 0:
        return []
    _, factors = char.factor_list()
    out = []
    for factor, char_multiplicity in factors:
        factor = factor.monic()
        step = evaluate(factor, m)
        power = step
        current = rank(power)
        multiplicity = 1
        while multiplicity < char_multiplicity:
            following = power @ step
            following_rank = rank(following)
            if following_rank == current:
                break
            power, current = following, following_rank
            multiplicity += 1
        out.append((factor, multiplicity))
    out.sort(key=_factor_key)
    logging.debug("minimal polynomial of %dx%d matrix has %d factors", m.nrows, m.nrows, len(out))
    return out


def primary_decomposition(m: Matrix, degree_cap: int = DEFAULT_DEGREE_CAP) -> List[Tuple[Poly, List[tuple]]]:
    """
    Splits the space acted on by ``m`` into the generalized eigenspaces ``ker f(m)^k``,
    one per irreducible factor of the minimal polynomial.
    """
    out = []
    for factor, multiplicity in minimal_polynomial_and_factor(m, degree_cap):
        out.append((factor, kernel_basis(evaluate(factor, m).power(multiplicity))))
    return out


def single_eigenvalue(m: Matrix, degree_cap: int = DEFAULT_DEGREE_CAP):
    """
    The eigenvalue ``c`` if the minimal polynomial of ``m`` is a power of ``x - c``,
    otherwise ``None``.
    """
    factors = minimal_polynomial_and_factor(m, degree_cap)
    if len(factors) != 1 or factors[0][0].degree() != 1:
        return None
    constant = factors[0][0].all_coeffs()[1]
    return -m.field(constant)

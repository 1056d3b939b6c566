import random

import pytest

from siltinglib.exactalg import (
    EchelonBasis,
    FieldSpec,
    Matrix,
    complement_indices,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
)

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def test_field_parse_and_render():
    assert FieldSpec.parse("Q") == Q
    assert FieldSpec.parse("F 5") == F5
    assert str(F5) == "F 5"
    assert F5.render(F5(-1)) == "4"
    assert Q.render(Q("6/4")) == "3/2"


def test_field_rejects_composite_modulus():
    with pytest.raises(ValueError):
        FieldSpec.prime(4)
    with pytest.raises(ValueError):
        FieldSpec.parse("R")


def test_rref_identity():
    m = Matrix.identity(Q, 3)
    reduced, pivots, r = rref(m)
    assert reduced == m
    assert pivots == [0, 1, 2]
    assert r == 3


def test_rref_rank_one_over_rationals():
    reduced, _, r = rref(Matrix.from_rows(Q, [[1, 1], [1, 1]]))
    assert reduced == Matrix.from_rows(Q, [[1, 1], [0, 0]])
    assert r == 1


def test_rref_over_f5():
    m = Matrix.from_rows(F5, [[2, 4], [1, 2]])
    reduced, pivots, r = rref(m)
    assert reduced == Matrix.from_rows(F5, [[1, 2], [0, 0]])
    assert pivots == [0]
    assert r == 1


def test_rref_is_idempotent_and_rank_nullity_holds():
    rng = random.Random(7)
    for field in (Q, F5):
        for _ in range(10):
            rows = [[rng.randrange(-3, 4) for _ in range(5)] for _ in range(4)]
            m = Matrix.from_rows(field, rows)
            reduced, _, r = rref(m)
            assert rref(reduced)[0] == reduced
            kernel = kernel_basis(m)
            assert r + len(kernel) == m.ncols
            for v in kernel:
                assert not any(m.apply(v))


def test_kernel_examples():
    assert kernel_basis(Matrix.from_rows(Q, [[1, 1], [1, 1]])) == [(Q(-1), Q(1))]
    assert kernel_basis(Matrix.from_rows(Q, [[1, 2], [3, 4]])) == []
    assert len(kernel_basis(Matrix.zeros(Q, 2, 3))) == 3


def test_solve_and_inverse():
    m = Matrix.from_rows(Q, [[1, 2], [3, 4]])
    inv = inverse(m)
    assert m @ inv == Matrix.identity(Q, 2)
    rhs = Matrix.from_rows(Q, [[5], [6]])
    x = solve(m, rhs)
    assert m @ x == rhs
    singular = Matrix.from_rows(Q, [[1, 1], [1, 1]])
    assert solve(singular, Matrix.from_rows(Q, [[1], [0]])) is None
    with pytest.raises(ValueError):
        inverse(singular)


def test_empty_shapes():
    empty = Matrix.zeros(Q, 0, 3)
    assert rank(empty) == 0
    assert len(kernel_basis(empty)) == 3
    assert (Matrix.zeros(Q, 2, 0) @ Matrix.zeros(Q, 0, 4)).is_zero()


def test_echelon_basis_coordinates():
    basis = EchelonBasis(Q, 3, track_coordinates=True)
    assert basis.add([Q(1), Q(0), Q(1)])
    assert basis.add([Q(0), Q(1), Q(1)])
    assert not basis.add([Q(1), Q(1), Q(2)])
    coeffs = basis.coordinates([Q(2), Q(3), Q(5)])
    assert coeffs[:2] == [Q(2), Q(3)]
    assert basis.coordinates([Q(0), Q(0), Q(1)]) is None


def test_complement_indices():
    e = [[Q(1), Q(0)], [Q(0), Q(1)], [Q(1), Q(1)]]
    assert complement_indices(Q, [e[0]], [e[2], e[0], e[1]], 2) == [0]

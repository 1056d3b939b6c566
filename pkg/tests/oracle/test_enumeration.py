import pytest

from siltinglib.exactalg import FieldSpec
from siltinglib.oracle import (
    CapTooLarge,
    EnumerationCaps,
    brute_bricks,
    enumerate_reps_upto_iso,
    module_pool,
    orbit_representatives,
)
from tests.conftest import dual_numbers, kronecker, linear_a2, preprojective_a2


def test_linear_a2_indecomposables(f2):
    found = enumerate_reps_upto_iso(linear_a2(f2), EnumerationCaps(max_total_dim=2))
    assert sorted(m.dims for m in found) == [(0, 1), (1, 0), (1, 1)]


def test_counts_stable_under_larger_caps(f3):
    alg = linear_a2(f3)
    small = enumerate_reps_upto_iso(alg, EnumerationCaps(prime=3, max_total_dim=2))
    large = enumerate_reps_upto_iso(alg, EnumerationCaps(prime=3, max_total_dim=4))
    assert len(small) == len(large) == 3


def test_dual_numbers_indecomposables(f2):
    found = enumerate_reps_upto_iso(dual_numbers(f2), EnumerationCaps(max_total_dim=2))
    assert sorted(m.dims for m in found) == [(1,), (2,)]


def test_kronecker_points_of_the_projective_line(f2):
    alg = kronecker(f2)
    assert len(orbit_representatives(alg, (1, 1), 2**16)) == 4
    found = enumerate_reps_upto_iso(alg, EnumerationCaps(max_total_dim=2, per_vertex_dim=1))
    assert len([m for m in found if m.dims == (1, 1)]) == 3


def test_bricks(f2):
    bricks = brute_bricks(preprojective_a2(f2), EnumerationCaps(max_total_dim=2))
    assert len(bricks) == 4
    assert {m.dims for m in bricks} <= {(1, 0), (0, 1), (1, 1)}
    assert len(brute_bricks(linear_a2(f2), EnumerationCaps(max_total_dim=2))) == 3
    assert [m.dims for m in brute_bricks(dual_numbers(f2), EnumerationCaps(max_total_dim=2))] == [(1,)]


def test_cap_too_large(f2):
    with pytest.raises(CapTooLarge):
        enumerate_reps_upto_iso(dual_numbers(f2), EnumerationCaps(max_total_dim=3, max_states=16))


def test_enumeration_needs_a_matching_prime_field(f3):
    with pytest.raises(ValueError):
        enumerate_reps_upto_iso(linear_a2(), EnumerationCaps())
    with pytest.raises(ValueError):
        enumerate_reps_upto_iso(linear_a2(f3), EnumerationCaps(prime=2))


def test_caps_from_environment(monkeypatch):
    monkeypatch.setenv("SILTING_ORACLE_MAX_TOTAL_DIM", "3")
    monkeypatch.setenv("SILTING_ORACLE_PRIME", "3")
    caps = EnumerationCaps()
    assert caps.max_total_dim == 3
    assert caps.prime == 3
    monkeypatch.setenv("SILTING_ORACLE_PRIME", "5")
    with pytest.raises(ValueError):
        EnumerationCaps()


def test_module_pool(f2):
    assert len(module_pool(linear_a2(f2), dim_cap=2)) == 6
    pool = module_pool(linear_a2(), dim_cap=2)
    assert len(pool) == 6
    assert all(m.total_dim <= 2 for m in pool)

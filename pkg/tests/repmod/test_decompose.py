import random

import pytest

from siltinglib.exactalg import Matrix, rank
from siltinglib.repmod import (
    Rep,
    change_basis,
    decompose,
    direct_sum,
    endomorphism_radical,
    group_isomorphic,
    in_gen,
    is_brick,
    is_isomorphic,
    trace_submodule,
)
from tests.conftest import dual_numbers, linear_a2, preprojective_a2


def _random_invertible(field, n, rng):
    while True:
        m = Matrix.from_rows(field, [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)], n)
        if rank(m) == n:
            return m


def _conjugate(module, seed):
    rng = random.Random(seed)
    return change_basis(module, [_random_invertible(module.field, d, rng) for d in module.dims])


def test_decompose_literal_sum():
    alg = linear_a2()
    p1, s2 = Rep.projective(alg, 0), Rep.simple(alg, 1)
    classes = group_isomorphic(decompose(direct_sum([p1, p1, s2])))
    counts = sorted((m.dims, k) for m, k in classes)
    assert counts == [((0, 1), 1), ((1, 1), 2)]


def test_decompose_conjugated_sum():
    alg = linear_a2()
    p1, s1 = Rep.projective(alg, 0), Rep.simple(alg, 0)
    for seed in range(3):
        summands = decompose(_conjugate(direct_sum([p1, s1]), seed), seed=seed)
        assert sorted(m.dims for m in summands) == [(1, 0), (1, 1)]
        assert is_isomorphic(direct_sum(summands), direct_sum([p1, s1]))


def test_decompose_indecomposable():
    alg = linear_a2()
    assert len(decompose(Rep.projective(alg, 0))) == 1
    assert decompose(Rep.zero(alg)) == []


def test_decompose_over_prime_field(f2):
    alg = preprojective_a2(f2)
    regular = Rep.regular(alg)
    summands = decompose(_conjugate(regular, 5))
    assert sorted(m.dims for m in summands) == [(1, 1), (1, 1)]


def test_isomorphism_examples():
    alg = linear_a2()
    p1 = Rep.projective(alg, 0)
    assert is_isomorphic(p1, _conjugate(p1, 11))
    assert not is_isomorphic(p1, direct_sum([Rep.simple(alg, 0), Rep.simple(alg, 1)]))
    assert is_isomorphic(Rep.zero(alg), Rep.zero(alg))


def test_bricks():
    a2 = linear_a2()
    assert is_brick(Rep.projective(a2, 0))
    assert not is_brick(direct_sum([Rep.simple(a2, 0), Rep.simple(a2, 1)]))
    kx = dual_numbers()
    assert is_brick(Rep.simple(kx, 0))
    assert not is_brick(Rep.regular(kx))


def test_endomorphism_radical():
    kx = dual_numbers()
    assert len(endomorphism_radical(Rep.regular(kx))) == 1
    assert endomorphism_radical(Rep.simple(kx, 0)) == []


def test_trace_submodule_examples():
    alg = linear_a2()
    p1, s1, s2 = Rep.projective(alg, 0), Rep.simple(alg, 0), Rep.simple(alg, 1)
    assert trace_submodule(p1, s1)[0].dims == (1, 0)
    assert trace_submodule(p1, s2)[0].is_zero()
    assert trace_submodule(s1, p1)[0].is_zero()
    assert in_gen(p1, s1)
    assert not in_gen(s1, p1)


def test_trace_is_idempotent():
    alg = preprojective_a2()
    regular = Rep.regular(alg)
    p1 = Rep.projective(alg, 0)
    sub, _ = trace_submodule(p1, regular)
    again, _ = trace_submodule(p1, sub)
    assert again.dims == sub.dims

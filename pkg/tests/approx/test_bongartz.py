import pytest

from siltinglib.approx import NotPresilting, bongartz_complete
from siltinglib.repmod import Rep, TwoTermComplex, direct_sum, is_isomorphic, min_proj_presentation, standard_modules
from tests.conftest import dual_numbers, linear_a2, preprojective_a2


def _pool(alg):
    std = standard_modules(alg)
    return std.simples + std.projectives + std.injectives


def test_completion_of_zero_is_regular():
    alg = linear_a2()
    pair = bongartz_complete(TwoTermComplex.stalk(alg), pool=_pool(alg))
    assert pair.support == frozenset()
    assert len(pair.summands) == 2
    assert is_isomorphic(pair.module(), Rep.regular(alg))


def test_completion_of_simple_top():
    alg = linear_a2()
    sigma1 = min_proj_presentation(Rep.simple(alg, 0))
    pair = bongartz_complete(sigma1, pool=_pool(alg))
    assert pair.support == frozenset()
    expected = direct_sum([Rep.projective(alg, 0), Rep.simple(alg, 0)])
    assert is_isomorphic(pair.module(), expected)


def test_completion_of_shifted_projective():
    alg = linear_a2()
    # (P1 -> 0): the completion lives on the vertex 2 only
    pair = bongartz_complete(TwoTermComplex.stalk(alg, p1=(0,)), pool=_pool(alg))
    assert pair.support == frozenset({0})
    assert is_isomorphic(pair.module(), Rep.simple(alg, 1))


def test_completion_over_preprojective():
    alg = preprojective_a2()
    for module in standard_modules(alg).simples:
        pair = bongartz_complete(min_proj_presentation(module), pool=_pool(alg))
        assert len(pair.summands) + len(pair.support) == 2


def test_rejects_non_presilting():
    alg = dual_numbers()
    with pytest.raises(NotPresilting):
        bongartz_complete(min_proj_presentation(Rep.simple(alg, 0)))

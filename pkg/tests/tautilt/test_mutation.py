import pytest

from siltinglib.repmod import Rep, direct_sum, is_isomorphic
from siltinglib.tautilt import (
    SiltingPair,
    bongartz_pair,
    co_bongartz_pair,
    exchanged_position,
    mutate,
    validate_pair,
)
from tests.conftest import dual_numbers, linear_a2, linear_a3, preprojective_a2


def test_mutation_at_simple_projective():
    alg = linear_a2()
    start = SiltingPair.regular(alg)
    result = mutate(start, start.gkeys.index((0, 1)))
    assert result.support_complement == frozenset()
    expected = direct_sum([Rep.projective(alg, 0), Rep.simple(alg, 0)])
    assert is_isomorphic(result.module, expected)


def test_mutation_drops_to_support():
    alg = linear_a2()
    start = SiltingPair.regular(alg)
    result = mutate(start, start.gkeys.index((1, 0)))
    assert result.support_complement == frozenset({0})
    assert is_isomorphic(result.module, Rep.projective(alg, 1))


def test_mutation_of_local_algebra():
    alg = dual_numbers()
    start = SiltingPair.regular(alg)
    result = mutate(start, 0)
    assert result.module.is_zero()
    assert result.support_complement == frozenset({0})
    assert mutate(result, 0).same_as(start)


@pytest.mark.parametrize("builder", [linear_a2, preprojective_a2])
def test_mutation_is_an_involution(builder):
    start = SiltingPair.regular(builder())
    for position in range(start.rank):
        result = mutate(start, position)
        assert validate_pair(result)
        assert not result.same_as(start)
        back = mutate(result, exchanged_position(start, result))
        assert back.same_as(start)


def test_co_bongartz_pair_is_the_smallest_completion():
    alg = linear_a2()
    p1, s1, p2 = Rep.projective(alg, 0), Rep.simple(alg, 0), Rep.projective(alg, 1)

    completed = co_bongartz_pair(alg, [p1])
    assert completed.support_complement == frozenset()
    assert is_isomorphic(completed.module, direct_sum([p1, s1]))

    completed = co_bongartz_pair(alg, [p2])
    assert completed.support_complement == frozenset({0})
    assert is_isomorphic(completed.module, p2)


def test_mutation_up_uses_the_opposite_algebra():
    alg = linear_a2()
    p1, s1 = Rep.projective(alg, 0), Rep.simple(alg, 0)
    start = SiltingPair.from_summands(alg, [p1, s1])
    result = mutate(start, start.gkeys.index((1, -1)))
    assert result.same_as(SiltingPair.regular(alg))


def test_mutation_at_support_vertex_goes_up():
    alg = linear_a2()
    start = SiltingPair.from_summands(alg, [Rep.projective(alg, 1)], [0])
    result = mutate(start, start.positions().index(("support", 0)))
    assert result.same_as(SiltingPair.regular(alg))


@pytest.mark.parametrize("builder", [linear_a2, preprojective_a2, linear_a3])
def test_mutation_matches_the_completions(builder):
    alg = builder()
    start = SiltingPair.regular(alg)
    for position in range(start.rank):
        rest = [m for i, m in enumerate(start.indec_summands) if i != position]
        down = mutate(start, position)
        assert down.same_as(co_bongartz_pair(alg, rest))
        up = mutate(down, exchanged_position(start, down))
        assert up.same_as(bongartz_pair(alg, rest, ()))

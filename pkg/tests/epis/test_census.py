import pytest

from siltinglib.epis import diagram_commutes, epiclass_census, ring_epi_from_node, verify_ring_epi
from siltinglib.latticewide import NotComplete
from siltinglib.repmod import Rep, direct_sum, standard_modules
from siltinglib.tautilt import SiltingPair, exchange_graph
from tests.conftest import corpus_algebra, dual_numbers, kronecker, linear_a2, preprojective_a2, two_loop


def _pool(alg):
    std = standard_modules(alg)
    s1 = Rep.simple(alg, 0)
    return list(std.simples + std.projectives) + [direct_sum([s1, s1]), direct_sum([std.projectives[0], s1])]


def test_regular_node_gives_the_algebra():
    alg = linear_a2()
    presentation = ring_epi_from_node(SiltingPair.regular(alg))
    assert presentation.dim_b == alg.dim
    assert presentation.flags
    assert sorted(s.dims for s in presentation.semibrick) == [(0, 1), (1, 0)]


def test_zero_node_gives_the_zero_ring():
    alg = linear_a2()
    presentation = ring_epi_from_node(SiltingPair.from_summands(alg, [], [0, 1]))
    assert presentation.dim_b == 0
    assert presentation.semibrick == ()
    assert presentation.flags


def test_simple_node_gives_the_field():
    alg = linear_a2()
    presentation = ring_epi_from_node(SiltingPair.from_summands(alg, [Rep.simple(alg, 0)], [1]))
    assert presentation.dim_b == 1
    assert [s.dims for s in presentation.semibrick] == [(1, 0)]
    assert presentation.flags.tor1_zero


def test_projective_injective_node_gives_a_matrix_ring():
    alg = linear_a2()
    node = SiltingPair.from_summands(alg, [Rep.projective(alg, 0), Rep.simple(alg, 0)])
    presentation = ring_epi_from_node(node, pool=_pool(alg))
    assert presentation.dim_b == 4
    assert presentation.reflection.dims == (2, 2)
    assert presentation.flags.essential_image_consistent


def test_flags_hold_when_rerun():
    alg = linear_a2()
    for node in exchange_graph(alg).nodes:
        presentation = ring_epi_from_node(node)
        assert verify_ring_epi(presentation)


def test_census_a2():
    rows = epiclass_census(exchange_graph(linear_a2()))
    assert len(rows) == 5
    assert sorted(row.dim_b for row in rows) == [0, 1, 1, 3, 4]
    assert sum(len(row.semibrick_dims) for row in rows) == 5
    assert rows[0].to_dict()["flags"]["tor1_zero"] is True
    assert [row.presentation.flags.essential_image_consistent for row in rows] == [True] * 5


def test_census_dual_numbers_excludes_the_top_surjection():
    rows = epiclass_census(exchange_graph(dual_numbers()))
    assert sorted(row.dim_b for row in rows) == [0, 2]


@pytest.mark.slow
def test_census_preprojective_a2():
    graph = exchange_graph(preprojective_a2())
    rows = epiclass_census(graph)
    assert len(rows) == len(graph.nodes) == 6


def test_census_needs_a_complete_graph():
    with pytest.raises(NotComplete):
        epiclass_census(exchange_graph(kronecker(), max_nodes=4))


def test_diagram_commutes_on_a2():
    alg = linear_a2()
    for node in exchange_graph(alg).nodes:
        assert diagram_commutes(node, _pool(alg))


def test_census_checks_essential_images_on_the_given_pool():
    alg = linear_a2()
    rows = epiclass_census(exchange_graph(alg), pool=_pool(alg))
    assert all(row.presentation.flags.essential_image_consistent is True for row in rows)


@pytest.mark.slow
def test_census_preprojective_a3():
    graph = exchange_graph(corpus_algebra("preprojective_a", n=3))
    rows = epiclass_census(graph)
    assert len(rows) == len(graph.nodes) == 24
    assert all(row.presentation.flags.essential_image_consistent is True for row in rows)


@pytest.mark.slow
def test_census_wild_example():
    graph = exchange_graph(corpus_algebra("wild_R", n=9))
    assert graph.complete
    assert len(epiclass_census(graph)) == len(graph.nodes)


@pytest.mark.slow
def test_census_two_loop_every_clause_holds():
    graph = exchange_graph(two_loop())
    rows = epiclass_census(graph)
    assert len(rows) == len(graph.nodes)
    for row in rows:
        flags = row.presentation.flags
        assert flags.is_ring_hom and flags.is_epimorphism and flags.tor1_zero
        assert flags.sigma_inverting is True
        assert flags.essential_image_consistent is True

import pytest

from siltinglib.cli import SiltingOptions
from siltinglib.cli.acceptance import check_kronecker, kronecker_dims
from siltinglib.exactalg import DegreeCapExceeded
from siltinglib.latticewide import hasse
from siltinglib.repmod import group_isomorphic, is_isomorphic
from siltinglib.tautilt import (
    TRUNCATED,
    Finite,
    Inconclusive,
    decide_tau_tilting_finite,
    exchange,
    exchange_graph,
)
from tests.conftest import (
    corpus_algebra,
    dual_numbers,
    kronecker,
    linear_a2,
    linear_a3,
    preprojective_a2,
    two_loop,
)


def test_linear_a2_graph():
    graph = exchange_graph(linear_a2())
    assert graph.complete
    assert len(graph.nodes) == 5
    assert len(graph.edges) == 5
    assert all(graph.degree(i) == 2 for i in range(5))


def test_preprojective_a2_graph():
    graph = exchange_graph(preprojective_a2())
    assert graph.complete
    assert len(graph.nodes) == 6
    assert len(graph.edges) == 6


def test_traversal_independence():
    alg = preprojective_a2()
    plain = exchange_graph(alg)
    for seed in (1, 2):
        shuffled = exchange_graph(alg, seed=seed, shuffle=True)
        assert set(shuffled.keys()) == set(plain.keys())
        edges = {frozenset((shuffled.nodes[e.source].key(), shuffled.nodes[e.target].key())) for e in shuffled.edges}
        expected = {frozenset((plain.nodes[e.source].key(), plain.nodes[e.target].key())) for e in plain.edges}
        assert edges == expected


def test_threaded_traversal():
    alg = linear_a2()
    graph = exchange_graph(alg, workers=3)
    assert set(graph.keys()) == set(exchange_graph(alg).keys())


def test_distinct_summands_have_distinct_gkeys():
    graph = exchange_graph(preprojective_a2())
    seen = {}
    for node in graph.nodes:
        for g, m in zip(node.gkeys, node.indec_summands):
            if g in seen:
                assert is_isomorphic(seen[g], m)
            seen[g] = m


def test_kronecker_truncates():
    graph = exchange_graph(kronecker(), max_nodes=6)
    assert not graph.complete
    assert "max_nodes" in graph.caps_hit


def test_local_algebra_is_finite():
    decision = decide_tau_tilting_finite(dual_numbers())
    assert isinstance(decision, Finite)
    assert len(decision.graph.nodes) == 2


def test_kronecker_is_inconclusive():
    decision = decide_tau_tilting_finite(kronecker(), max_nodes=6)
    assert isinstance(decision, Inconclusive)
    assert decision.nodes_explored == 6


def test_graph_serialises():
    graph = exchange_graph(linear_a2())
    document = graph.to_dict()
    assert document["status"] == "complete"
    assert len(document["nodes"]) == 5
    assert graph.to_networkx().number_of_edges() == 5


@pytest.mark.slow
def test_linear_a3_graph():
    graph = exchange_graph(linear_a3())
    assert graph.complete
    assert len(graph.nodes) == 14
    assert all(graph.degree(i) == 3 for i in range(14))


@pytest.mark.slow
def test_two_loop_algebra_is_finite():
    assert isinstance(decide_tau_tilting_finite(two_loop()), Finite)


def test_kronecker_truncates_by_dimension():
    graph = exchange_graph(kronecker(), max_nodes=1000, max_dim=9)
    assert graph.status == TRUNCATED
    assert graph.caps_hit == ["max_dim"]
    assert all(m.total_dim <= 9 for node in graph.nodes for m in node.indec_summands)


def test_degree_cap_truncates_as_max_dim(monkeypatch):
    mutate = exchange.mutate

    def capped(pair, position, seed=0):
        if pair.support_complement:
            raise DegreeCapExceeded(61, 60)
        return mutate(pair, position, seed)

    monkeypatch.setattr(exchange, "mutate", capped)
    graph = exchange_graph(linear_a2())
    assert graph.status == TRUNCATED
    assert graph.caps_hit == ["max_dim"]
    assert len(graph.nodes) == 4


def test_kronecker_dimension_schedule():
    assert kronecker_dims((20, 40), 60) == (10, 20)
    assert kronecker_dims((100, 1000), 60) == (30, 60)


@pytest.mark.slow
def test_preprojective_a3_graph():
    graph = exchange_graph(corpus_algebra("preprojective_a", n=3))
    assert graph.complete
    assert len(graph.nodes) == 24
    assert all(graph.degree(i) == 3 for i in range(24))


@pytest.mark.slow
def test_wild_example_is_finite_with_one_brick_per_join_irreducible():
    decision = decide_tau_tilting_finite(corpus_algebra("wild_R", n=9))
    assert isinstance(decision, Finite)
    diagram = hasse(decision.graph)
    bricks = group_isomorphic([label.brick for label in diagram.labels().values()])
    irreducible = sum(diagram.digraph.out_degree(i) == 1 for i in diagram.digraph)
    assert len(bricks) == irreducible


@pytest.mark.slow
@pytest.mark.parametrize("caps", [(20, 40), (100, 1000)])
def test_kronecker_stays_inconclusive_and_grows(caps):
    checks = check_kronecker(caps, SiltingOptions())
    assert all(check.passed for check in checks)

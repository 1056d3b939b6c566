from siltinglib.oracle import (
    EnumerationCaps,
    enumerate_reps_upto_iso,
    enumerate_torsion_classes_repfinite,
    inclusion_lattice,
    torsion_closure,
)
from siltinglib.tautilt import exchange_graph
from tests.conftest import dual_numbers, linear_a2, preprojective_a2


def _indecomposables(alg):
    return enumerate_reps_upto_iso(alg, EnumerationCaps(max_total_dim=2))


def test_linear_a2_has_five_torsion_classes(f2):
    classes = enumerate_torsion_classes_repfinite(_indecomposables(linear_a2(f2)))
    assert len(classes) == 5
    assert classes[0] == frozenset()
    assert classes[-1] == frozenset(range(3))


def test_preprojective_a2_has_six_torsion_classes(f2):
    assert len(enumerate_torsion_classes_repfinite(_indecomposables(preprojective_a2(f2)))) == 6


def test_dual_numbers_has_two_torsion_classes(f2):
    assert len(enumerate_torsion_classes_repfinite(_indecomposables(dual_numbers(f2)))) == 2


def test_closure_of_the_projective_simple(f2):
    indecomposables = _indecomposables(linear_a2(f2))
    p1 = next(k for k, m in enumerate(indecomposables) if m.dims == (1, 1))
    s1 = next(k for k, m in enumerate(indecomposables) if m.dims == (1, 0))
    assert torsion_closure(indecomposables, [p1]) == frozenset({p1, s1})


def test_inclusion_lattice_is_a_pentagon(f2):
    lattice = inclusion_lattice(enumerate_torsion_classes_repfinite(_indecomposables(linear_a2(f2))))
    assert lattice.number_of_nodes() == 5
    assert lattice.number_of_edges() == 5


def test_oracle_matches_exchange_graph(f2):
    alg = linear_a2(f2)
    classes = enumerate_torsion_classes_repfinite(_indecomposables(alg))
    assert len(exchange_graph(alg).nodes) == len(classes)

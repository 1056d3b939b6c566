from siltinglib.epis import (
    UNIVERSALITY_NOTE,
    idempotent_quotient,
    in_essential_image,
    is_ring_hom,
    presentation_from_reflection,
    surjection_witness,
    verify_ring_epi,
)
from siltinglib.repmod import Rep, RepMap, TwoTermComplex, direct_sum
from tests.conftest import dual_numbers, linear_a2, preprojective_a2


def test_identity_is_a_ring_epimorphism():
    alg = linear_a2()
    regular = Rep.regular(alg)
    presentation = presentation_from_reflection(RepMap.identity(regular), TwoTermComplex.stalk(alg))
    assert presentation.dim_b == alg.dim
    flags = verify_ring_epi(presentation)
    assert flags
    assert flags.sigma_inverting is True
    assert flags.failures() == []
    assert presentation.unit(alg.one()) == presentation.b.one


def test_identity_structure_constants_have_a_unit():
    alg = preprojective_a2()
    presentation = presentation_from_reflection(RepMap.identity(Rep.regular(alg)))
    b = presentation.b
    for j in range(b.dim):
        basis_vector = tuple(b.field.one if k == j else b.field.zero for k in range(b.dim))
        assert b.multiply(b.one, basis_vector) == basis_vector
        assert b.multiply(basis_vector, b.one) == basis_vector
    assert is_ring_hom(presentation)


def test_surjection_onto_the_top_of_dual_numbers_has_tor():
    witness = surjection_witness(dual_numbers())
    assert witness.dim_b == 1
    assert witness.flags.is_ring_hom
    assert witness.flags.is_epimorphism
    assert not witness.flags.tor1_zero
    assert witness.flags.sigma_inverting is None
    assert witness.flags.failures() == ["tor1_zero"]
    assert not witness.flags


def test_idempotent_quotient_a2():
    alg = linear_a2()
    presentation = idempotent_quotient(alg, [1])
    assert presentation.dim_b == 1
    assert presentation.flags
    assert presentation.flags.sigma_inverting
    assert presentation.left_module.dims == (1, 0)
    assert presentation.note == UNIVERSALITY_NOTE


def test_essential_image_of_idempotent_quotient():
    alg = linear_a2()
    presentation = idempotent_quotient(alg, [1])
    s1 = Rep.simple(alg, 0)
    assert in_essential_image(presentation, s1)
    assert in_essential_image(presentation, direct_sum([s1, s1]))
    assert not in_essential_image(presentation, Rep.simple(alg, 1))
    assert not in_essential_image(presentation, Rep.projective(alg, 0))
    assert in_essential_image(presentation, Rep.zero(alg))


def test_essential_image_consistency_clause():
    alg = linear_a2()
    presentation = idempotent_quotient(alg, [1])
    pool = [Rep.simple(alg, 0), Rep.simple(alg, 1), Rep.projective(alg, 0)]
    flags = verify_ring_epi(presentation, pool, lambda x: x.dims[1] == 0)
    assert flags.essential_image_consistent is True
    flags = verify_ring_epi(presentation, pool, lambda x: True)
    assert flags.essential_image_consistent is False


def test_presentation_serialises():
    document = idempotent_quotient(linear_a2(), [1]).to_dict()
    assert document["dim_B"] == 1
    assert document["B"]["one"] == ["1"]
    assert document["flags"]["tor1_zero"] is True

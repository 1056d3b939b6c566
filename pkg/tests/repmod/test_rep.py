import random

import pytest

from siltinglib.exactalg import Matrix
from siltinglib.repmod import (
    Rep,
    RepMap,
    direct_sum,
    generated_subrep,
    hom_basis,
    hom_dim,
    is_isomorphic,
    map_kernel_cokernel_image,
    radical_submodule,
    standard_modules,
    top,
)
from tests.conftest import dual_numbers, linear_a2, preprojective_a2


def test_standard_modules_linear_a2():
    alg = linear_a2()
    std = standard_modules(alg)
    assert std.projectives[0].dims == (1, 1)
    assert std.projectives[1].dims == (0, 1)
    assert std.projectives[1] == std.simples[1].relabel(std.projectives[1].label)
    assert std.injectives[0].dims == (1, 0)
    assert is_isomorphic(std.injectives[1], std.projectives[0])
    for module in std.projectives + std.simples + std.injectives:
        assert module.satisfies_relations()


def test_standard_modules_dual_numbers():
    alg = dual_numbers()
    std = standard_modules(alg)
    assert std.projectives[0].dims == (2,)
    assert is_isomorphic(std.projectives[0], std.injectives[0])


def test_standard_modules_preprojective():
    std = standard_modules(preprojective_a2())
    assert std.projectives[0].dims == (1, 1)
    assert std.projectives[1].dims == (1, 1)
    for module in std.projectives + std.injectives:
        assert module.satisfies_relations()


def test_hom_dimensions():
    alg = linear_a2()
    p, s, _ = standard_modules(alg)
    assert hom_dim(p[0], s[0]) == 1
    assert hom_dim(p[0], s[1]) == 0
    assert hom_dim(Rep.regular(alg), Rep.regular(alg)) == 3
    for f in hom_basis(Rep.regular(alg), Rep.regular(alg)):
        assert f.is_valid()


def test_duality_spot_check():
    for alg in (linear_a2(), dual_numbers(), preprojective_a2()):
        std = standard_modules(alg)
        for module in std.projectives + std.simples:
            for i, injective in enumerate(std.injectives):
                assert hom_dim(module, injective) == module.dims[i]


def test_kernel_of_projection_onto_top():
    alg = linear_a2()
    p, s, _ = standard_modules(alg)
    (projection,) = hom_basis(p[0], s[0])
    kci = map_kernel_cokernel_image(projection)
    assert kci.kernel.dims == (0, 1)
    assert kci.cokernel.is_zero()
    assert kci.image.dims == (1, 0)
    assert projection.compose(kci.kernel_inclusion).is_zero()


def test_cokernel_of_identity_and_image_of_zero():
    alg = preprojective_a2()
    m = Rep.regular(alg)
    assert map_kernel_cokernel_image(RepMap.identity(m)).cokernel.is_zero()
    assert map_kernel_cokernel_image(RepMap.zero(m, m)).image.is_zero()


def test_top_of_projective_is_simple():
    alg = linear_a2()
    p, s, _ = standard_modules(alg)
    quotient, projection = top(p[0])
    assert quotient.dims == s[0].dims
    assert projection.is_valid() and projection.is_surjective()


def test_radical_and_generated_submodules():
    alg = linear_a2()
    p, s, _ = standard_modules(alg)
    radical, inclusion = radical_submodule(p[0])
    assert radical.dims == (0, 1)
    assert inclusion.is_valid() and inclusion.is_injective()
    assert is_isomorphic(radical, s[1])

    whole, _ = generated_subrep(p[0], [[(alg.field.one,)], []])
    assert whole.dims == (1, 1)
    socle, _ = generated_subrep(p[0], [[], [(alg.field.one,)]])
    assert socle.dims == (0, 1)


def test_direct_sum_dims_and_relations():
    alg = preprojective_a2()
    p, s, _ = standard_modules(alg)
    total = direct_sum([p[0], s[1], p[1]])
    assert total.dims == (2, 3)
    assert total.satisfies_relations()


def test_element_action_matches_arrows():
    alg = linear_a2()
    p = Rep.projective(alg, 0)
    a = alg.element("a")
    action = p.element_action(a)
    assert action == Matrix.from_rows(alg.field, [[0, 0], [1, 0]])
    rng = random.Random(1)
    vector = tuple(alg.field.random_element(rng) for _ in range(p.total_dim))
    assert p.act(p.act(vector, a), a) == (alg.field.zero, alg.field.zero)


def test_from_matrices_checks_relations():
    alg = dual_numbers()
    module = Rep.from_matrices(alg, [2], {"alpha": [[0, 1], [0, 0]]})
    assert module.satisfies_relations()
    with pytest.raises(ValueError, match="relations"):
        Rep.from_matrices(alg, [1], {"alpha": [[1]]})


def test_from_matrices_checks_arrows_and_shapes():
    alg = linear_a2()
    with pytest.raises(ValueError, match="no arrows named"):
        Rep.from_matrices(alg, [1, 1], {"b": [[1]]})
    with pytest.raises(ValueError, match="rows"):
        Rep.from_matrices(alg, [1, 2], {"a": [[1]]})
    with pytest.raises(ValueError, match="dimensions"):
        Rep.from_matrices(alg, [1], {})

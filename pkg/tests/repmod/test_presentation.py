from siltinglib.repmod import (
    Rep,
    dual_complex,
    dual_module,
    ext1_dim,
    is_isomorphic,
    is_projective,
    min_proj_presentation,
    standard_modules,
    tau,
    tensor_and_tor1,
    transpose,
)
from tests.conftest import dual_numbers, linear_a2, preprojective_a2


def test_presentation_of_simple_top():
    alg = linear_a2()
    sigma = min_proj_presentation(Rep.simple(alg, 0))
    assert sigma.p1 == (1,)
    assert sigma.p0 == (0,)
    assert sigma.entries[0][0] == alg.element("a")
    assert sigma.is_radical()
    assert sigma.cokernel().dims == (1, 0)


def test_presentation_of_projective():
    alg = linear_a2()
    sigma = min_proj_presentation(Rep.projective(alg, 0))
    assert sigma.p1 == ()
    assert sigma.p0 == (0,)
    assert sigma.gkey() == (1, 0)


def test_periodic_presentation():
    alg = dual_numbers()
    sigma = min_proj_presentation(Rep.simple(alg, 0))
    assert sigma.p1 == (0,) and sigma.p0 == (0,)
    assert sigma.entries[0][0] == alg.element("alpha")
    assert sigma.gkey() == (0,)


def test_cokernel_recovers_module():
    for alg in (linear_a2(), dual_numbers(), preprojective_a2()):
        std = standard_modules(alg)
        for module in std.simples + std.injectives:
            assert is_isomorphic(min_proj_presentation(module).cokernel(), module)


def test_tau_of_projectives_vanishes():
    for alg in (linear_a2(), dual_numbers(), preprojective_a2()):
        for module in standard_modules(alg).projectives:
            assert tau(module).is_zero()
            assert is_projective(module)


def test_tau_examples():
    a2 = linear_a2()
    assert is_isomorphic(tau(Rep.simple(a2, 0)), Rep.simple(a2, 1))
    kx = dual_numbers()
    assert is_isomorphic(tau(Rep.simple(kx, 0)), Rep.simple(kx, 0))
    pre = preprojective_a2()
    assert is_isomorphic(tau(Rep.simple(pre, 0)), Rep.simple(pre, 1))


def test_ext1():
    a2 = linear_a2()
    s1, s2 = Rep.simple(a2, 0), Rep.simple(a2, 1)
    assert ext1_dim(s1, s2) == 1
    assert ext1_dim(s2, s1) == 0
    p1 = Rep.projective(a2, 0)
    for module in (s1, s2, p1):
        assert ext1_dim(p1, module) == 0
    kx = dual_numbers()
    assert ext1_dim(Rep.simple(kx, 0), Rep.simple(kx, 0)) == 1


def test_tor1():
    a2 = linear_a2()
    left_s1 = Rep.simple(a2.opposite(), 0)
    assert tensor_and_tor1(Rep.simple(a2, 1), left_s1)[1] == 0
    assert tensor_and_tor1(Rep.simple(a2, 0), left_s1) == (1, 0)
    kx = dual_numbers()
    assert tensor_and_tor1(Rep.simple(kx, 0), Rep.simple(kx.opposite(), 0)) == (1, 1)


def test_tensor_with_regular_left_module():
    alg = preprojective_a2()
    regular_left = Rep.regular(alg.opposite())
    for module in standard_modules(alg).simples:
        tensor, tor1 = tensor_and_tor1(module, regular_left)
        assert tensor == module.total_dim
        assert tor1 == 0


def test_dual_module_lives_over_opposite():
    alg = preprojective_a2()
    dual = dual_module(Rep.projective(alg, 0))
    assert dual.algebra is alg.opposite()
    assert dual.dims == (1, 1)
    assert dual.satisfies_relations()


def test_dual_complex_swaps_terms():
    alg = linear_a2()
    sigma = min_proj_presentation(Rep.simple(alg, 0))
    dual = dual_complex(sigma)
    assert dual.algebra is alg.opposite()
    assert (dual.p1, dual.p0) == (sigma.p0, sigma.p1)
    assert dual_complex(dual) == sigma


def test_transpose_of_simple_top():
    alg = linear_a2()
    transposed = transpose(Rep.simple(alg, 0))
    assert transposed.algebra is alg.opposite()
    assert transposed.dims == (0, 1)
    assert transpose(Rep.projective(alg, 0)).is_zero()


def test_dual_of_transpose_is_tau():
    for builder in (linear_a2, preprojective_a2, dual_numbers):
        alg = builder()
        for m in standard_modules(alg).simples:
            if is_projective(m):
                continue
            assert is_isomorphic(dual_module(transpose(m)), tau(m))

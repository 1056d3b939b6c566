import pytest

from siltinglib.approx import is_presilting
from siltinglib.oracle import homotopy_hom_dim
from siltinglib.repmod import TwoTermComplex, min_proj_presentation, standard_modules
from tests.conftest import dual_numbers, linear_a2, preprojective_a2


def test_simple_presentation_over_a2():
    alg = linear_a2()
    sigma = min_proj_presentation(standard_modules(alg).simples[0])
    assert homotopy_hom_dim(sigma, sigma, 1) == 0
    assert homotopy_hom_dim(sigma, sigma, 0) == 1


def test_simple_presentation_over_dual_numbers():
    alg = dual_numbers()
    sigma = min_proj_presentation(standard_modules(alg).simples[0])
    assert homotopy_hom_dim(sigma, sigma, 1) == 1
    assert not is_presilting(sigma)


def test_stalk_complexes():
    alg = dual_numbers()
    stalk = TwoTermComplex.stalk(alg, p0=[0])
    assert homotopy_hom_dim(stalk, stalk, 0) == 2
    assert homotopy_hom_dim(stalk, stalk, 1) == 0
    shifted = TwoTermComplex.stalk(alg, p1=[0])
    assert homotopy_hom_dim(shifted, stalk, 1) == 2


def test_agrees_with_presilting_test():
    alg = preprojective_a2()
    std = standard_modules(alg)
    for module in std.simples + std.projectives + std.injectives:
        sigma = min_proj_presentation(module)
        assert (homotopy_hom_dim(sigma, sigma, 1) == 0) == is_presilting(sigma)


def test_shift_out_of_range():
    alg = linear_a2()
    sigma = TwoTermComplex.regular(alg)
    with pytest.raises(ValueError):
        homotopy_hom_dim(sigma, sigma, 2)

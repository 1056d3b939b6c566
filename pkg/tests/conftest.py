import pytest

from siltinglib.exactalg import FieldSpec
from siltinglib.quiveralg import PathExpr, Quiver, build_based_algebra


def linear_a2(field=None):
    quiver = Quiver.build(["1", "2"], [("a", "1", "2")])
    return build_based_algebra(quiver, [], field)


def dual_numbers(field=None):
    quiver = Quiver.build(["1"], [("alpha", "1", "1")])
    return build_based_algebra(quiver, [PathExpr.parse("alpha*alpha")], field)


def preprojective_a2(field=None):
    quiver = Quiver.build(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    return build_based_algebra(quiver, [PathExpr.parse("a*b"), PathExpr.parse("b*a")], field)


def kronecker(field=None):
    quiver = Quiver.build(["1", "2"], [("x", "1", "2"), ("y", "1", "2")])
    return build_based_algebra(quiver, [], field)


@pytest.fixture
def a2():
    return linear_a2()


@pytest.fixture
def kx2():
    return dual_numbers()


@pytest.fixture
def pre_a2():
    return preprojective_a2()


@pytest.fixture
def kron():
    return kronecker()


@pytest.fixture
def f2():
    return FieldSpec.prime(2)


@pytest.fixture
def f3():
    return FieldSpec.prime(3)


def linear_a3(field=None):
    quiver = Quiver.build(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    return build_based_algebra(quiver, [], field)


def two_loop(field=None):
    """Loops at the outer vertices of ``1 -> 2 <- 3`` with ``α²``, ``αγ``, ``β³`` and ``β²δ`` zero."""
    quiver = Quiver.build(
        ["1", "2", "3"],
        [("alpha", "1", "1"), ("gamma", "1", "2"), ("delta", "3", "2"), ("beta", "3", "3")],
    )
    relations = ["alpha*alpha", "alpha*gamma", "beta*beta*beta", "beta*beta*delta"]
    return build_based_algebra(quiver, [PathExpr.parse(r) for r in relations], field)


def corpus_algebra(name, field=None, **params):
    from siltinglib.cli import load_corpus

    return load_corpus(name, params).to_algebra(field)

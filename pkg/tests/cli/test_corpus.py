import pytest

from siltinglib.cli import CORPUS, UnknownCorpusEntry, load_corpus, parse_algebra_file
from siltinglib.cli.corpus import parse_params


def test_kronecker():
    kronecker = load_corpus("kronecker")
    assert kronecker.vertices == ("1", "2")
    assert kronecker.arrows == (("x", "1", "2"), ("y", "1", "2"))
    assert kronecker.relations == ()


def test_wild_example():
    wild = load_corpus("wild_R", {"n": 9})
    assert len(wild.vertices) == 9
    assert ("alpha", "7", "8") in wild.arrows
    assert ("beta", "8", "9") in wild.arrows
    assert ("c", "7", "9") in wild.arrows
    assert len(wild.arrows) == 9
    assert wild.relations == ("alpha*beta",)
    assert any("alpha*beta" in c for c in wild.comments)


def test_two_loop():
    algebra_file = load_corpus("two_loop_gdp")
    assert algebra_file.relations == ("alpha*alpha", "alpha*gamma", "beta*beta*beta", "beta*beta*delta")
    assert len(algebra_file.arrows) == 4


def test_preprojective_dimensions():
    assert load_corpus("preprojective_a").to_algebra().dim == 4
    assert load_corpus("preprojective_a", {"n": 3}).to_algebra().dim == 10


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_round_trip(name):
    algebra_file = load_corpus(name)
    parsed = parse_algebra_file(algebra_file.render())
    assert parsed == algebra_file
    assert parsed.comments == algebra_file.comments


@pytest.mark.parametrize("name", ["linear_a2", "linear_an", "kx2", "kronecker", "preprojective_a", "two_loop_gdp"])
def test_entries_build(name):
    algebra = load_corpus(name).to_algebra()
    assert algebra.dim > 0


def test_unknown_entries():
    with pytest.raises(UnknownCorpusEntry):
        load_corpus("nope")
    with pytest.raises(UnknownCorpusEntry):
        load_corpus("kronecker", {"n": 3})
    with pytest.raises(UnknownCorpusEntry):
        load_corpus("preprojective_a", {"n": 1})


def test_parse_params():
    assert parse_params(["n=9"]) == {"n": 9}
    with pytest.raises(UnknownCorpusEntry):
        parse_params(["n"])


def test_each_algebra_is_registered_once():
    generators = [entry.generator for entry in CORPUS.values()]
    assert len(generators) == len(set(generators))
    assert "kx2" in CORPUS
    assert "dual_numbers" not in CORPUS

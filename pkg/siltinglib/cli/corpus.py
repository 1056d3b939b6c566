"""Named example algebras, generated as algebra files."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from siltinglib.cli.fileformat import AlgebraFile


class UnknownCorpusEntry(Exception):
    """Raised for a corpus name or parameter that is not recognised."""


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    source: str
    generator: Callable[..., AlgebraFile]
    defaults: Tuple[Tuple[str, int], ...] = ()

    def build(self, params: Optional[Mapping[str, int]] = None) -> AlgebraFile:
        params = dict(params or {})
        unknown = set(params) - {k for k, _ in self.defaults}
        if unknown:
            raise UnknownCorpusEntry(f"{self.name} takes no parameter {', '.join(sorted(unknown))}")
        return self.generator(**{**dict(self.defaults), **params})


def _numbered(n: int) -> Tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


def _need(name: str, n: int, least: int) -> None:
    if n < least:
        raise UnknownCorpusEntry(f"{name} needs n >= {least}, got {n}")


def linear_an(n: int) -> AlgebraFile:
    _need("linear_an", n, 1)
    arrows = tuple((f"a{i}", str(i), str(i + 1)) for i in range(1, n))
    return AlgebraFile(None, _numbered(n), arrows, comments=(f"path algebra of 1 -> 2 -> ... -> {n}",))


def linear_a2() -> AlgebraFile:
    return AlgebraFile(None, ("1", "2"), (("a", "1", "2"),), comments=("path algebra of 1 -> 2",))


def dual_numbers() -> AlgebraFile:
    return AlgebraFile(
        None,
        ("1",),
        (("x", "1", "1"),),
        ("x*x",),
        comments=("k[x]/(x^2): one loop x with x^2 = 0",),
    )


def kronecker() -> AlgebraFile:
    return AlgebraFile(
        None,
        ("1", "2"),
        (("x", "1", "2"), ("y", "1", "2")),
        comments=("Kronecker algebra: two parallel arrows, no relations",),
    )


def preprojective_a(n: int) -> AlgebraFile:
    """
    Preprojective algebra of type A_n: ``a_i: i -> i+1`` and ``b_i: i+1 -> i``, with
    the sum of the 2-cycles at each vertex zero up to sign.
    """
    _need("preprojective_a", n, 2)
    arrows: List[Tuple[str, str, str]] = []
    for i in range(1, n):
        arrows += [(f"a{i}", str(i), str(i + 1)), (f"b{i}", str(i + 1), str(i))]
    relations = ["a1*b1"]
    relations += [f"a{i}*b{i} - b{i - 1}*a{i - 1}" for i in range(2, n)]
    relations.append(f"b{n - 1}*a{n - 1}")
    return AlgebraFile(
        None,
        _numbered(n),
        tuple(arrows),
        tuple(relations),
        comments=(
            f"preprojective algebra of type A{n}",
            "support tau-tilting modules correspond to the Weyl group elements",
        ),
    )


def wild_r(n: int) -> AlgebraFile:
    """
    The path ``1 -> ... -> n-2``, then ``alpha: n-2 -> n-1``, ``beta: n-1 -> n`` and a
    direct arrow ``n-2 -> n``, modulo the single relation ``alpha*beta``.
    """
    _need("wild_R", n, 3)
    arrows = [(f"a{i}", str(i), str(i + 1)) for i in range(1, n - 2)]
    arrows += [
        ("alpha", str(n - 2), str(n - 1)),
        ("beta", str(n - 1), str(n)),
        ("c", str(n - 2), str(n)),
    ]
    return AlgebraFile(
        None,
        _numbered(n),
        tuple(arrows),
        ("alpha*beta",),
        comments=(
            f"wild for n >= 9 with finitely many bricks, here n = {n}; global dimension two",
            "composition written right to left there: beta alpha = alpha*beta here",
        ),
    )


def two_loop_gdp() -> AlgebraFile:
    return AlgebraFile(
        None,
        ("1", "2", "3"),
        (("alpha", "1", "1"), ("gamma", "1", "2"), ("delta", "3", "2"), ("beta", "3", "3")),
        ("alpha*alpha", "alpha*gamma", "beta*beta*beta", "beta*beta*delta"),
        comments=(
            "loops alpha at 1 and beta at 3, gamma: 1 -> 2, delta: 3 -> 2",
            "alpha^2 = gamma alpha = beta^3 = delta beta^2 = 0 written right to left",
            "representation-infinite, tau-tilting finite",
        ),
    )


CORPUS: Dict[str, CorpusEntry] = {
    entry.name: entry
    for entry in [
        CorpusEntry("linear_a2", "path algebra of A2", linear_a2),
        CorpusEntry("linear_an", "path algebra of linearly oriented A_n", linear_an, (("n", 3),)),
        CorpusEntry("kx2", "dual numbers", dual_numbers),
        CorpusEntry("kronecker", "Kronecker algebra", kronecker),
        CorpusEntry("preprojective_a", "preprojective algebra of Dynkin type A", preprojective_a, (("n", 2),)),
        CorpusEntry("wild_R", "wild algebra with finitely many bricks", wild_r, (("n", 9),)),
        CorpusEntry("two_loop_gdp", "representation-infinite algebra with finitely many epiclasses", two_loop_gdp),
    ]
}


def load_corpus(name: str, params: Optional[Mapping[str, int]] = None) -> AlgebraFile:
    """
    :raises UnknownCorpusEntry: for an unknown name or parameter
    """
    entry = CORPUS.get(name)
    if entry is None:
        raise UnknownCorpusEntry(f"no corpus entry {name!r}; known: {', '.join(sorted(CORPUS))}")
    return entry.build(params)


def parse_params(items: List[str]) -> Dict[str, int]:
    """``["n=9"]`` to ``{"n": 9}``."""
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not value.strip().lstrip("-").isdigit():
            raise UnknownCorpusEntry(f"parameters are written key=integer, got {item!r}")
        out[key.strip()] = int(value)
    return out

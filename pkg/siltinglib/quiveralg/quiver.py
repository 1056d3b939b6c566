"""Quivers, paths and formal path expressions (``a*b`` reads "first a, then b")."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx


class MalformedRelation(Exception):
    """Raised when a path expression has non-composable or non-parallel terms."""

    def __init__(self, message: str, column: Optional[int] = None):
        super().__init__(message)
        self.column = column


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


class Path(NamedTuple):
    """
    A path of the quiver given by vertex indices and the arrow indices it walks
    along; the trivial path at ``v`` is ``Path(v, v, ())``.
    """

    source: int
    target: int
    arrows: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def key(self) -> tuple:
        return len(self.arrows), self.source, self.arrows

    def concat(self, other: Path):
        """The composite "first self, then other", or ``None`` when they do not meet."""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    _vertex_index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _arrow_index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seen = set()
        for label in list(self.vertices) + [a.name for a in self.arrows]:
            if label in seen:
                raise ValueError(f"duplicate label {label!r}")
            seen.add(label)
        for a in self.arrows:
            for end in (a.source, a.target):
                if not 0 <= end < len(self.vertices):
                    raise ValueError(f"arrow {a.name!r} refers to unknown vertex {end}")
        object.__setattr__(self, "_vertex_index", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_arrow_index", {a.name: i for i, a in enumerate(self.arrows)})

    @classmethod
    def build(cls, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]) -> Quiver:
        """Builds a quiver from vertex names and ``(name, source, target)`` triples of names."""
        index = {v: i for i, v in enumerate(vertices)}
        out = []
        for name, source, target in arrows:
            if source not in index or target not in index:
                raise ValueError(f"arrow {name!r} refers to an undeclared vertex")
            out.append(Arrow(name, index[source], index[target]))
        return cls(tuple(vertices), tuple(out))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def vertex_index(self, name: str) -> int:
        return self._vertex_index[name]

    def arrow_index(self, name: str) -> int:
        return self._arrow_index[name]

    def arrows_from(self, v: int) -> List[int]:
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def arrows_to(self, v: int) -> List[int]:
        return [i for i, a in enumerate(self.arrows) if a.target == v]

    def trivial_path(self, v: int) -> Path:
        return Path(v, v, ())

    def arrow_path(self, index: int) -> Path:
        a = self.arrows[index]
        return Path(a.source, a.target, (index,))

    def path_from_word(self, word: Sequence[str]) -> Path:
        """
        The path walking the arrows of ``word`` in order.

        :raises MalformedRelation: when an arrow is unknown or two consecutive arrows do not meet
        """
        if not word:
            raise MalformedRelation("empty arrow word")
        indices = []
        for name in word:
            if name not in self._arrow_index:
                raise MalformedRelation(f"unknown arrow {name!r}")
            indices.append(self._arrow_index[name])
        for left, right in zip(indices, indices[1:]):
            if self.arrows[left].target != self.arrows[right].source:
                raise MalformedRelation(
                    f"{self.arrows[left].name}*{self.arrows[right].name} is not composable"
                )
        return Path(self.arrows[indices[0]].source, self.arrows[indices[-1]].target, tuple(indices))

    def word(self, path: Path) -> str:
        if not path.arrows:
            return f"e_{self.vertices[path.source]}"
        return "*".join(self.arrows[i].name for i in path.arrows)

    def paths_of_length(self, length: int) -> Iterator[Path]:
        if length == 0:
            for v in range(self.vertex_count):
                yield self.trivial_path(v)
            return
        for shorter in self.paths_of_length(length - 1):
            if shorter.arrows:
                continuations = self.arrows_from(shorter.target)
            else:
                continuations = self.arrows_from(shorter.source)
            for i in continuations:
                if shorter.arrows:
                    yield Path(shorter.source, self.arrows[i].target, shorter.arrows + (i,))
                else:
                    yield self.arrow_path(i)

    def opposite(self) -> Quiver:
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def opposite_path(self, path: Path) -> Path:
        return Path(path.target, path.source, tuple(reversed(path.arrows)))

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for a in self.arrows:
            graph.add_edge(self.vertices[a.source], self.vertices[a.target], key=a.name, label=a.name)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?([A-Za-z_]\w*(?:\s*\*\s*[A-Za-z_]\w*)*)\s*")


@dataclass(frozen=True)
class PathExpr:
    """
    A formal linear combination of arrow words, e.g. ``a1*b1 - b0*a0``.
    Integer coefficients are mapped into the ground field on use.
    """

    terms: Tuple[Tuple[int, Tuple[str, ...]], ...]

    @classmethod
    def monomial(cls, *word: str) -> PathExpr:
        return cls(((1, tuple(word)),))

    @classmethod
    def parse(cls, text: str) -> PathExpr:
        """
        Parses ``+``/``-`` separated terms, each an optional integer coefficient
        times a ``*``-joined arrow word.

        :raises MalformedRelation: with the 1-based column of the offending character
        """
        terms = []
        pos = 0
        while pos < len(text):
            match = _TERM.match(text, pos)
            if match is None or match.end() == pos or (terms and match.group(1) is None):
                raise MalformedRelation(f"cannot parse term at {text[pos:]!r}", column=pos + 1)
            sign = -1 if match.group(1) == "-" else 1
            coefficient = int(match.group(2)) if match.group(2) else 1
            word = tuple(part.strip() for part in match.group(3).split("*"))
            terms.append((sign * coefficient, word))
            pos = match.end()
        if not terms:
            raise MalformedRelation("empty relation", column=1)
        return cls(tuple(terms))

    def render(self) -> str:
        out = ""
        for c, word in self.terms:
            body = "*".join(word)
            magnitude = abs(c)
            text = body if magnitude == 1 else f"{magnitude}*{body}"
            if not out:
                out = text if c > 0 else f"-{text}"
            else:
                out += f" + {text}" if c > 0 else f" - {text}"
        return out

    def __str__(self) -> str:
        return self.render()

    def resolve(self, quiver: Quiver) -> List[Tuple[int, Path]]:
        """
        Maps each word onto a path of ``quiver``.

        :raises MalformedRelation: when terms are not composable or not parallel
        """
        resolved = [(c, quiver.path_from_word(word)) for c, word in self.terms]
        ends = {(p.source, p.target) for _, p in resolved}
        if len(ends) > 1:
            raise MalformedRelation(f"terms of {self.render()!r} do not share source and target")
        return resolved

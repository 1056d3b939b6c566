"""
The line-oriented algebra file::

    # linear A2
    field Q
    vertex 1
    vertex 2
    arrow a 1 2
    relation a*b - 2*c*d
    cap max_nodes 500

``#`` starts a comment, blank lines are ignored and tokens are separated by any
whitespace. Relations compose left to right: ``a*b`` is ``a`` followed by ``b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from siltinglib.exactalg import FieldSpec
from siltinglib.quiveralg import (
    DEFAULT_MAX_PATH_LENGTH,
    BasedAlgebra,
    MalformedRelation,
    PathExpr,
    Quiver,
    build_based_algebra,
)

CAP_NAMES = ("max_nodes", "max_dim", "depth_cap", "max_path_length")

_VERTEX = re.compile(r"^\w+$")
_ARROW = re.compile(r"^[A-Za-z_]\w*$")


class ParseError(Exception):
    """Raised for text that does not follow the algebra file grammar."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SemanticError(Exception):
    """Raised for a well-formed file describing no valid bound quiver."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class AlgebraFile:
    """A parsed algebra file. Comments travel along but take no part in equality."""

    field: Optional[str]
    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str, str], ...]
    relations: Tuple[str, ...] = ()
    caps: Tuple[Tuple[str, int], ...] = ()
    comments: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def cap_dict(self) -> Dict[str, int]:
        return dict(self.caps)

    def quiver(self) -> Quiver:
        return Quiver.build(self.vertices, self.arrows)

    def to_algebra(self, field_spec: Optional[FieldSpec] = None, max_path_length: Optional[int] = None) -> BasedAlgebra:
        """
        Builds the algebra. An explicit ``field_spec`` wins over the file's header,
        which wins over the rationals.

        :raises NonAdmissible: when the relations do not cut out a finite dimensional algebra
        """
        if field_spec is None:
            field_spec = FieldSpec.parse(self.field) if self.field else FieldSpec.rationals()
        if max_path_length is None:
            max_path_length = self.cap_dict.get("max_path_length", DEFAULT_MAX_PATH_LENGTH)
        return build_based_algebra(
            self.quiver(), [PathExpr.parse(r) for r in self.relations], field_spec, max_path_length
        )

    def render(self) -> str:
        """The canonical text of the file; :func:`parse_algebra_file` reads it back unchanged."""
        lines = [f"# {c}" if c else "#" for c in self.comments]
        if self.field is not None:
            lines.append(f"field {self.field}")
        lines += [f"vertex {v}" for v in self.vertices]
        lines += [f"arrow {name} {source} {target}" for name, source, target in self.arrows]
        lines += [f"relation {r}" for r in self.relations]
        lines += [f"cap {name} {value}" for name, value in self.caps]
        return "\n".join(lines) + "\n"


def _expect(tokens: List[Tuple[int, str]], count: int, keyword: str, line: int) -> None:
    if len(tokens) != count + 1:
        column = tokens[count + 1][0] if len(tokens) > count + 1 else tokens[-1][0] + len(tokens[-1][1])
        raise ParseError(f"'{keyword}' takes {count} argument(s), got {len(tokens) - 1}", line, column)


def parse_algebra_file(text: str) -> AlgebraFile:
    """
    Reads an algebra file.

    :raises ParseError: with the line and column of the first malformed token
    :raises SemanticError: for duplicate labels, undeclared vertices and relations whose
        words do not compose
    """
    field_spec: Optional[str] = None
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    relations: List[Tuple[int, str]] = []
    caps: List[Tuple[str, int]] = []
    comments: List[str] = []
    declared: Dict[str, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        body, hash_mark, comment = raw.partition("#")
        if hash_mark and not body.strip():
            comments.append(comment.strip())
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if not tokens:
            continue
        keyword = tokens[0][1]
        if keyword == "field":
            if field_spec is not None:
                raise SemanticError("second field header", line_number)
            spec_text = " ".join(t for _, t in tokens[1:])
            try:
                field_spec = str(FieldSpec.parse(spec_text))
            except ValueError as e:
                column = tokens[1][0] if len(tokens) > 1 else len(body) + 1
                raise ParseError(str(e), line_number, column) from e
        elif keyword == "vertex":
            _expect(tokens, 1, keyword, line_number)
            column, name = tokens[1]
            if not _VERTEX.match(name):
                raise ParseError(f"invalid vertex name {name!r}", line_number, column)
            if name in declared:
                raise SemanticError(f"duplicate label {name!r}", line_number)
            declared[name] = line_number
            vertices.append(name)
        elif keyword == "arrow":
            _expect(tokens, 3, keyword, line_number)
            column, name = tokens[1]
            if not _ARROW.match(name):
                raise ParseError(f"invalid arrow name {name!r}", line_number, column)
            if name in declared:
                raise SemanticError(f"duplicate label {name!r}", line_number)
            for _, end in tokens[2:]:
                if end not in vertices:
                    raise SemanticError(f"arrow {name!r} refers to unknown vertex {end!r}", line_number)
            declared[name] = line_number
            arrows.append((name, tokens[2][1], tokens[3][1]))
        elif keyword == "relation":
            if len(tokens) < 2:
                raise ParseError("empty relation", line_number, len(body) + 1)
            start = tokens[1][0]
            try:
                expr = PathExpr.parse(body[start - 1 :].rstrip())
            except MalformedRelation as e:
                raise ParseError(str(e), line_number, start + (e.column or 1) - 1) from e
            relations.append((line_number, expr.render()))
        elif keyword == "cap":
            _expect(tokens, 2, keyword, line_number)
            (name_column, name), (value_column, value) = tokens[1], tokens[2]
            if name not in CAP_NAMES:
                raise ParseError(f"unknown cap {name!r}", line_number, name_column)
            if not value.isdigit() or int(value) < 1:
                raise ParseError(f"cap {name} needs a positive integer", line_number, value_column)
            caps.append((name, int(value)))
        else:
            raise ParseError(f"unknown key {keyword!r}", line_number, tokens[0][0])

    if not vertices:
        raise SemanticError("no vertices declared", max(1, len(text.splitlines())))
    quiver = Quiver.build(vertices, arrows)
    for line_number, relation in relations:
        try:
            PathExpr.parse(relation).resolve(quiver)
        except MalformedRelation as e:
            raise SemanticError(str(e), line_number) from e

    return AlgebraFile(
        field_spec,
        tuple(vertices),
        tuple(arrows),
        tuple(r for _, r in relations),
        tuple(caps),
        tuple(comments),
    )

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from siltinglib.exactalg import EchelonBasis, FieldSpec, Matrix, rref
from siltinglib.quiveralg.quiver import Path, PathExpr, Quiver

DEFAULT_MAX_PATH_LENGTH = 24
PATH_ENUMERATION_CAP = 20000

Element = Tuple
SparseVector = Dict[int, object]


class NonAdmissible(Exception):
    """Raised when the relations do not generate an admissible ideal within the path-length cap."""


class BasedAlgebra:
    """
    A finite dimensional algebra ``KQ/I`` on a basis of path monomials.

    Elements are dense coefficient tuples over :attr:`basis`. Basis paths are
    ordered by length, then source vertex, then arrow word, so the trivial paths
    come first in vertex order.
    """

    def __init__(
        self,
        field: FieldSpec,
        quiver: Quiver,
        relations: Tuple[PathExpr, ...],
        basis: Sequence[Path],
        normal_forms: Dict[Path, SparseVector],
        nilpotency: int,
        max_path_length: int,
    ):
        self.field = field
        self.quiver = quiver
        self.relations = relations
        self.basis: Tuple[Path, ...] = tuple(basis)
        self.nilpotency = nilpotency
        self.max_path_length = max_path_length
        self._index = {p: i for i, p in enumerate(self.basis)}
        self._normal_forms = normal_forms
        self._opposite: Optional[BasedAlgebra] = None
        self._table: Dict[int, Dict[int, SparseVector]] = {}
        for i, p in enumerate(self.basis):
            row = {}
            for j, q in enumerate(self.basis):
                composite = p.concat(q)
                if composite is None:
                    continue
                reduced = self.reduce_path(composite)
                if reduced:
                    row[j] = reduced
            self._table[i] = row

    def __repr__(self) -> str:
        return f"BasedAlgebra(dim={self.dim}, vertices={self.quiver.vertices}, field={self.field})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    def index_of(self, path: Path) -> int:
        return self._index[path]

    def basis_word(self, i: int) -> str:
        return self.quiver.word(self.basis[i])

    def reduce_path(self, path: Path) -> SparseVector:
        """Normal form of a path as a sparse vector over the basis."""
        if path.length >= self.nilpotency:
            return {}
        if path in self._index:
            return {self._index[path]: self.field.one}
        return dict(self._normal_forms.get(path, {}))

    def basis_product(self, i: int, j: int) -> SparseVector:
        return self._table[i].get(j, {})

    def zero(self) -> Element:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> Element:
        zero, one = self.field.zero, self.field.one
        return tuple(one if k == i else zero for k in range(self.dim))

    def from_sparse(self, sparse: SparseVector) -> Element:
        out = [self.field.zero] * self.dim
        for k, c in sparse.items():
            out[k] += c
        return tuple(out)

    def idempotent_index(self, v: int) -> int:
        return self._index[self.quiver.trivial_path(v)]

    def idempotent(self, v: int) -> Element:
        return self.basis_vector(self.idempotent_index(v))

    def one(self) -> Element:
        out = [self.field.zero] * self.dim
        for v in range(self.vertex_count):
            out[self.idempotent_index(v)] = self.field.one
        return tuple(out)

    def element(self, expr: Union[PathExpr, str]) -> Element:
        """The element named by a path expression such as ``"a*b - 2*c"``."""
        if isinstance(expr, str):
            expr = PathExpr.parse(expr)
        out = [self.field.zero] * self.dim
        for c, path in expr.resolve(self.quiver):
            coefficient = self.field(c)
            for k, value in self.reduce_path(path).items():
                out[k] += coefficient * value
        return tuple(out)

    def multiply(self, x: Element, y: Element) -> Element:
        out = [self.field.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, products in self._table[i].items():
                b = y[j]
                if not b:
                    continue
                ab = a * b
                for k, c in products.items():
                    out[k] += ab * c
        return tuple(out)

    def add(self, x: Element, y: Element) -> Element:
        return tuple(a + b for a, b in zip(x, y))

    def scale(self, c, x: Element) -> Element:
        return tuple(c * a for a in x)

    def peirce_indices(self, source: int, target: int) -> List[int]:
        """Basis indices spanning ``e_source A e_target``."""
        return [i for i, p in enumerate(self.basis) if p.source == source and p.target == target]

    def peirce_dim(self, source: int, target: int) -> int:
        return len(self.peirce_indices(source, target))

    def radical_indices(self) -> List[int]:
        return [i for i, p in enumerate(self.basis) if p.length > 0]

    def left_multiplication(self, x: Element) -> Matrix:
        """Matrix of ``y -> x*y`` on column coordinate vectors."""
        columns = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, columns, self.dim)

    def right_multiplication(self, x: Element) -> Matrix:
        """Matrix of ``y -> y*x`` on column coordinate vectors."""
        columns = [self.multiply(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, columns, self.dim)

    def structure_table(self) -> List[Tuple[int, int, int, str]]:
        out = []
        for i in range(self.dim):
            for j, products in sorted(self._table[i].items()):
                for k, c in sorted(products.items()):
                    if c:
                        out.append((i, j, k, self.field.render(c)))
        return out

    def render(self, x: Element) -> str:
        terms = []
        for k, c in enumerate(x):
            if c:
                coefficient = self.field.render(c)
                word = self.basis_word(k)
                terms.append(word if coefficient == "1" else f"{coefficient}*{word}")
        return " + ".join(terms) if terms else "0"

    def opposite(self) -> BasedAlgebra:
        """
        The opposite algebra on the reversed quiver; basis index ``i`` corresponds
        to the reversed path of basis index ``i`` here.
        """
        if self._opposite is None:
            flip = self.quiver.opposite_path
            relations = tuple(
                PathExpr(tuple((c, tuple(reversed(word))) for c, word in r.terms)) for r in self.relations
            )
            opposite = BasedAlgebra(
                self.field,
                self.quiver.opposite(),
                relations,
                [flip(p) for p in self.basis],
                {flip(p): nf for p, nf in self._normal_forms.items()},
                self.nilpotency,
                self.max_path_length,
            )
            opposite._opposite = self
            self._opposite = opposite
        return self._opposite


def _paths_upto(quiver: Quiver, max_length: int) -> List[Path]:
    out: List[Path] = []
    for length in range(max_length + 1):
        for path in quiver.paths_of_length(length):
            out.append(path)
            if len(out) > PATH_ENUMERATION_CAP:
                raise NonAdmissible(f"more than {PATH_ENUMERATION_CAP} paths of length <= {max_length}")
    return out


def _sandwiches(
    relation: Dict[Path, object], paths: List[Path], max_extra: int
) -> Iterable[Dict[Path, object]]:
    """All products ``u*r*v`` with ``|u| + |v| <= max_extra``."""
    some = next(iter(relation))
    lefts = [u for u in paths if u.target == some.source and u.length <= max_extra]
    rights = [v for v in paths if v.source == some.target and v.length <= max_extra]
    for u in lefts:
        for v in rights:
            if u.length + v.length > max_extra:
                continue
            yield {u.concat(p).concat(v): c for p, c in relation.items()}


def _nilpotency_bound(quiver: Quiver, relations: List[Dict[Path, object]], field: FieldSpec, cap: int) -> int:
    """
    Smallest N such that every path of length N is certified to lie in the ideal:
    it must be an exact combination of products ``u*r*v`` none of whose terms is
    longer than N plus the length spread of the relations.
    """
    spread = max((max(p.length for p in r) - min(p.length for p in r) for r in relations), default=0)
    for n in range(1, cap + 1):
        top = list(quiver.paths_of_length(n))
        if not top:
            return n
        if not relations:
            continue
        window = n + spread
        paths = _paths_upto(quiver, window)
        column = {p: k for k, p in enumerate(paths)}
        span = EchelonBasis(field, len(paths))
        for r in relations:
            longest = max(p.length for p in r)
            for product in _sandwiches(r, paths, window - longest):
                vector = [field.zero] * len(paths)
                for p, c in product.items():
                    vector[column[p]] += c
                span.add(vector)
        unit = [field.zero] * len(paths)
        certified = True
        for p in top:
            unit[column[p]] = field.one
            inside = span.contains(unit)
            unit[column[p]] = field.zero
            if not inside:
                certified = False
                break
        if certified:
            return n
    raise NonAdmissible(f"no path length up to {cap} vanishes; the algebra is not finite dimensional")


def build_based_algebra(
    quiver: Quiver,
    relations: Sequence[PathExpr],
    field: Optional[FieldSpec] = None,
    max_path_length: int = DEFAULT_MAX_PATH_LENGTH,
) -> BasedAlgebra:
    """
    Builds ``KQ/I`` for the ideal generated by ``relations``.

    :param quiver: the quiver
    :param relations: linear combinations of parallel paths of length at least two
    :param field: the ground field, rationals by default
    :param max_path_length: largest path length tried when certifying nilpotency
    :raises MalformedRelation: for non-composable or non-parallel terms
    :raises NonAdmissible: for short relations or when nilpotency cannot be certified
    """
    field = field or FieldSpec.rationals()
    resolved: List[Dict[Path, object]] = []
    for relation in relations:
        combined: Dict[Path, object] = {}
        for c, path in relation.resolve(quiver):
            if path.length < 2:
                raise NonAdmissible(f"relation {relation} has a term of length {path.length} < 2")
            combined[path] = combined.get(path, field.zero) + field(c)
        combined = {p: c for p, c in combined.items() if c}
        if combined:
            resolved.append(combined)

    nilpotency = _nilpotency_bound(quiver, resolved, field, max_path_length)
    logging.info("arrow ideal nilpotent of degree %d (%d relations)", nilpotency, len(resolved))

    short_paths = _paths_upto(quiver, nilpotency - 1)
    columns = sorted(short_paths, key=Path.key, reverse=True)
    column = {p: k for k, p in enumerate(columns)}
    rows = []
    for r in resolved:
        shortest = min(p.length for p in r)
        for product in _sandwiches(r, short_paths, nilpotency - 1 - shortest):
            row = [field.zero] * len(columns)
            for p, c in product.items():
                if p.length < nilpotency:
                    row[column[p]] += c
            if any(row):
                rows.append(row)

    pivots: List[int] = []
    reduced = None
    if rows:
        reduced, pivots, _ = rref(Matrix.from_rows(field, rows, len(columns)))
    pivot_set = set(pivots)
    basis = sorted((p for k, p in enumerate(columns) if k not in pivot_set), key=Path.key)
    index = {p: i for i, p in enumerate(basis)}
    normal_forms: Dict[Path, SparseVector] = {}
    for r, pivot in enumerate(pivots):
        nf = {}
        for k in range(pivot + 1, len(columns)):
            c = reduced.rows[r][k]
            if c and k not in pivot_set:
                nf[index[columns[k]]] = -c
        normal_forms[columns[pivot]] = nf
    return BasedAlgebra(field, quiver, tuple(relations), basis, normal_forms, nilpotency, max_path_length)


def multiply(alg: BasedAlgebra, x: Element, y: Element) -> Element:
    """Product of two elements given in the basis of ``alg``."""
    return alg.multiply(x, y)

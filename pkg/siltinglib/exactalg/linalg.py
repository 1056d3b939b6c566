"""Exact matrices over a :class:`FieldSpec` and the row reduction built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from siltinglib.exactalg.field import FieldSpec


@dataclass(frozen=True)
class Matrix:
    """
    An immutable rows x cols matrix whose entries are canonical elements of ``field``.
    Column vectors are acted on from the left: ``(m @ v)``.
    """

    field: FieldSpec
    nrows: int
    ncols: int
    rows: Tuple[tuple, ...]

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        converted = tuple(tuple(field(e) for e in row) for row in rows)
        for row in converted:
            if len(row) != ncols:
                raise ValueError(f"ragged row of length {len(row)}, expected {ncols}")
        return cls(field, len(converted), ncols, converted)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], nrows: int) -> Matrix:
        return cls.from_rows(field, [[col[i] for col in columns] for i in range(nrows)], len(columns))

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> Matrix:
        zero = field.zero
        return cls(field, nrows, ncols, tuple((zero,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        zero, one = field.zero, field.one
        return cls(field, n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def hstack(cls, field: FieldSpec, nrows: int, blocks: Iterable[Matrix]) -> Matrix:
        blocks = list(blocks)
        ncols = sum(b.ncols for b in blocks)
        rows = tuple(tuple(e for b in blocks for e in b.rows[i]) for i in range(nrows))
        return cls(field, nrows, ncols, rows)

    @classmethod
    def vstack(cls, field: FieldSpec, ncols: int, blocks: Iterable[Matrix]) -> Matrix:
        rows = tuple(row for b in blocks for row in b.rows)
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def block_diagonal(cls, field: FieldSpec, blocks: Sequence[Matrix]) -> Matrix:
        ncols = sum(b.ncols for b in blocks)
        zero = field.zero
        rows = []
        offset = 0
        for b in blocks:
            for row in b.rows:
                rows.append((zero,) * offset + row + (zero,) * (ncols - offset - b.ncols))
            offset += b.ncols
        return cls(field, len(rows), ncols, tuple(rows))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def flatten(self) -> tuple:
        return tuple(e for row in self.rows for e in row)

    def is_zero(self) -> bool:
        return not any(e for row in self.rows for e in row)

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows, tuple(self.columns()))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(
            self.field, len(rows), len(cols), tuple(tuple(self.rows[i][j] for j in cols) for i in rows)
        )

    def select_columns(self, cols: Sequence[int]) -> Matrix:
        return self.submatrix(range(self.nrows), cols)

    def scale(self, c) -> Matrix:
        return Matrix(self.field, self.nrows, self.ncols, tuple(tuple(c * e for e in row) for row in self.rows))

    def apply(self, vector: Sequence) -> tuple:
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, vector):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.field, self.nrows, self.ncols, tuple(tuple(-e for e in row) for row in self.rows))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = [zero] * other.ncols
            for a, other_row in zip(row, other.rows):
                if not a:
                    continue
                for j, b in enumerate(other_row):
                    if b:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix(self.field, self.nrows, other.ncols, tuple(out))

    def power(self, k: int) -> Matrix:
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            acc += self.rows[i][i]
        return acc

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.rows], self.shape, self.field.domain)

    def render(self) -> List[List[str]]:
        return [[self.field.render(e) for e in row] for row in self.rows]

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def _reduced_rows(m: Matrix) -> Tuple[List[Dict[int, object]], List[int]]:
    """
    The nonzero rows of the reduced row echelon form of ``m`` as sparse
    ``{column: entry}`` maps, ordered by pivot, together with the pivots.
    """
    entries = {}
    for i, row in enumerate(m.rows):
        nonzero = {j: e for j, e in enumerate(row) if e}
        if nonzero:
            entries[i] = nonzero
    if not entries:
        return [], []
    reduced, _ = DomainMatrix(entries, m.shape, m.field.domain).rref()
    rows = [dict(row) for row in reduced.to_sparse().rep.values() if row]
    rows.sort(key=min)
    return rows, [min(row) for row in rows]


def rref(m: Matrix) -> Tuple[Matrix, List[int], int]:
    """
    Returns the reduced row echelon form of ``m``, its pivot columns and its rank.
    """
    if m.nrows == 0 or m.ncols == 0:
        return m, [], 0
    sparse, pivots = _reduced_rows(m)
    zero = m.field.zero
    rows = [tuple(row.get(j, zero) for j in range(m.ncols)) for row in sparse]
    rows.extend([(zero,) * m.ncols] * (m.nrows - len(rows)))
    return Matrix(m.field, m.nrows, m.ncols, tuple(rows)), pivots, len(pivots)


def rank(m: Matrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return len(_reduced_rows(m)[1])


def kernel_basis(m: Matrix) -> List[tuple]:
    """
    A basis of the column vectors annihilated by ``m``; one vector per free column.
    """
    field = m.field
    if m.nrows == 0 or m.is_zero():
        return [tuple(field.one if i == j else field.zero for i in range(m.ncols)) for j in range(m.ncols)]
    reduced, pivots = _reduced_rows(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * m.ncols
        v[free] = field.one
        for r, p in enumerate(pivots):
            v[p] = -reduced[r].get(free, field.zero)
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """
    Some ``X`` with ``m @ X == rhs``, or ``None`` when the system is inconsistent.
    """
    if rhs.nrows != m.nrows:
        raise ValueError(f"right hand side has {rhs.nrows} rows, expected {m.nrows}")
    field = m.field
    if rhs.ncols == 0:
        return Matrix.zeros(field, m.ncols, 0)
    if m.nrows == 0:
        return Matrix.zeros(field, m.ncols, rhs.ncols)
    augmented = Matrix.hstack(field, m.nrows, [m, rhs])
    reduced, pivots = _reduced_rows(augmented)
    if pivots and pivots[-1] >= m.ncols:
        return None
    out = [[field.zero] * rhs.ncols for _ in range(m.ncols)]
    for r, p in enumerate(pivots):
        for j in range(rhs.ncols):
            out[p][j] = reduced[r].get(m.ncols + j, field.zero)
    return Matrix(field, m.ncols, rhs.ncols, tuple(tuple(row) for row in out))


def solve_vector(m: Matrix, vector: Sequence) -> Optional[tuple]:
    solution = solve(m, Matrix.from_columns(m.field, [vector], m.nrows))
    return None if solution is None else solution.column(0)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise ValueError(f"only square matrices are invertible, got {m.shape}")
    if rank(m) != m.nrows:
        raise ValueError("matrix is singular")
    return solve(m, Matrix.identity(m.field, m.nrows))


def column_space(m: Matrix) -> Matrix:
    """The columns of ``m`` at its pivot positions: a basis of its image."""
    if m.nrows == 0:
        return Matrix.zeros(m.field, 0, 0)
    _, pivots = _reduced_rows(m)
    return m.select_columns(pivots)


def left_kernel(m: Matrix) -> Matrix:
    """Rows spanning ``{y : y m = 0}``, stacked as a matrix."""
    vectors = kernel_basis(m.transpose())
    return Matrix(m.field, len(vectors), m.nrows, tuple(vectors))


class EchelonBasis:
    """
    An incrementally grown basis of a subspace, kept in echelon form so that
    membership and coordinates are cheap to query.
    """

    def __init__(self, field: FieldSpec, dimension: int, track_coordinates: bool = False):
        self.field = field
        self.dimension = dimension
        self.track_coordinates = track_coordinates
        self._rows: List[list] = []
        self._pivots: List[int] = []
        # coordinates of each echelon row through the vectors handed to add()
        self._combos: List[list] = []
        self._added = 0

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence):
        v = list(vector)
        combo = [self.field.zero] * self._added if self.track_coordinates else []
        for k, (row, pivot) in enumerate(zip(self._rows, self._pivots)):
            c = v[pivot]
            if c:
                for j in range(pivot, self.dimension):
                    if row[j]:
                        v[j] -= c * row[j]
                if self.track_coordinates:
                    for j, rc in enumerate(self._combos[k]):
                        if rc:
                            combo[j] -= c * rc
        return v, combo

    def contains(self, vector: Sequence) -> bool:
        v, _ = self._reduce(vector)
        return not any(v)

    def add(self, vector: Sequence) -> bool:
        """Adds ``vector``; returns whether it enlarged the span."""
        if len(vector) != self.dimension:
            raise ValueError(f"vector of length {len(vector)}, expected {self.dimension}")
        v, combo = self._reduce(vector)
        self._added += 1
        if self.track_coordinates:
            for row_combo in self._combos:
                row_combo.append(self.field.zero)
            combo.append(self.field.one)
        pivot = next((j for j, e in enumerate(v) if e), None)
        if pivot is None:
            return False
        inv = self.field.one / v[pivot]
        v = [e * inv for e in v]
        combo = [e * inv for e in combo]
        self._rows.append(v)
        self._pivots.append(pivot)
        self._combos.append(combo)
        return True

    def coordinates(self, vector: Sequence) -> Optional[list]:
        """
        Coefficients expressing ``vector`` through the vectors passed to :meth:`add`
        (dependent ones get coefficient zero), or ``None`` when outside the span.
        Needs ``track_coordinates``.
        """
        if not self.track_coordinates:
            raise ValueError("coordinates were not tracked")
        v = list(vector)
        coeffs = [self.field.zero] * self._added
        for row, pivot, row_combo in zip(self._rows, self._pivots, self._combos):
            c = v[pivot]
            if c:
                for j in range(pivot, self.dimension):
                    if row[j]:
                        v[j] -= c * row[j]
                for j, rc in enumerate(row_combo):
                    if rc:
                        coeffs[j] += c * rc
        if any(v):
            return None
        return coeffs


def span_rank(field: FieldSpec, vectors: Iterable[Sequence], dimension: int) -> int:
    basis = EchelonBasis(field, dimension)
    for v in vectors:
        basis.add(v)
    return len(basis)


def complement_indices(field: FieldSpec, subspace: Iterable[Sequence], candidates: Sequence[Sequence], dimension: int) -> List[int]:
    """
    Indices of ``candidates`` whose classes form a basis of
    ``span(subspace + candidates) / span(subspace)``.
    """
    basis = EchelonBasis(field, dimension)
    for v in subspace:
        basis.add(v)
    return [i for i, v in enumerate(candidates) if basis.add(v)]

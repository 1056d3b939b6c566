"""
Brute-force enumeration of modules over ``F_2`` and ``F_3``: every tuple of arrow
matrices satisfying the relations, one representative per base-change orbit.
"""

from __future__ import annotations

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from pydantic import validator
from pydantic_settings import BaseSettings

from siltinglib.quiveralg import BasedAlgebra
from siltinglib.repmod import (
    NotSplitError,
    Rep,
    RepMap,
    decompose,
    direct_sum,
    end_basis,
    is_brick,
    is_indecomposable,
    is_isomorphic,
    radical_submodule,
    standard_modules,
    tau,
    top,
)

EXHAUSTIVE_LIMIT = 10**5

IntMatrix = List[List[int]]


class CapTooLarge(Exception):
    """Raised when an enumeration would visit more states than its caps allow."""


class EnumerationCaps(BaseSettings):
    """
    Bounds for brute-force enumeration. Each dimension vector costs ``p ** E`` states,
    ``E`` the number of arrow-matrix entries, and ``max_states`` bounds that number.
    """

    prime: int = 2
    max_total_dim: int = 6
    per_vertex_dim: Optional[int] = None
    max_states: int = 2**16

    class Config:
        env_prefix = "SILTING_ORACLE_"

    @validator("prime", pre=True, always=True)
    def validate_prime(cls, v):
        v = int(v)
        if v not in (2, 3):
            raise ValueError(f"brute force runs over F_2 or F_3, not F_{v}")
        return v


def dimension_vectors(vertex_count: int, caps: EnumerationCaps) -> Iterator[Tuple[int, ...]]:
    """Nonzero dimension vectors within the caps, by total dimension."""
    per_vertex = caps.per_vertex_dim if caps.per_vertex_dim is not None else caps.max_total_dim
    for total in range(1, caps.max_total_dim + 1):
        for dims in itertools.product(range(per_vertex + 1), repeat=vertex_count):
            if sum(dims) == total:
                yield dims


class _Shape:
    """Unflattening of a state tuple into one integer matrix per arrow."""

    def __init__(self, algebra: BasedAlgebra, dims: Sequence[int]):
        self.arrows = [(a.source, a.target) for a in algebra.quiver.arrows]
        self.dims = tuple(dims)
        self.sizes = [self.dims[t] * self.dims[s] for s, t in self.arrows]
        self.entries = sum(self.sizes)

    def split(self, state: Sequence[int]) -> List[IntMatrix]:
        out, position = [], 0
        for (s, t), size in zip(self.arrows, self.sizes):
            flat = state[position : position + size]
            out.append([list(flat[r * self.dims[s] : (r + 1) * self.dims[s]]) for r in range(self.dims[t])])
            position += size
        return out

    @staticmethod
    def join(matrices: Sequence[IntMatrix]) -> Tuple[int, ...]:
        return tuple(e for m in matrices for row in m for e in row)


def _multiply(x: IntMatrix, y: IntMatrix, inner: int, columns: int, p: int) -> IntMatrix:
    return [[sum(x[i][k] * y[k][j] for k in range(inner)) % p for j in range(columns)] for i in range(len(x))]


def _relation_checks(algebra: BasedAlgebra) -> List[List[Tuple[int, Tuple[int, ...], int]]]:
    """Each relation as ``(coefficient mod p, arrow word, source vertex)`` terms."""
    field = algebra.field
    out = []
    for relation in algebra.relations:
        terms = []
        for c, path in relation.resolve(algebra.quiver):
            terms.append((int(field.render(field(c))), tuple(path.arrows), path.source))
        out.append(terms)
    return out


def _satisfies(shape: _Shape, matrices: Sequence[IntMatrix], relations, p: int) -> bool:
    dims = shape.dims
    for terms in relations:
        total: Optional[IntMatrix] = None
        for c, word, source in terms:
            current = [[int(i == j) for j in range(dims[source])] for i in range(dims[source])]
            vertex = source
            for a in word:
                current = _multiply(matrices[a], current, dims[vertex], dims[source], p)
                vertex = shape.arrows[a][1]
            current = [[(c * e) % p for e in row] for row in current]
            total = current if total is None else [[(a + b) % p for a, b in zip(r, q)] for r, q in zip(total, current)]
        if total is not None and any(e for row in total for e in row):
            return False
    return True


def _generators(dims: Sequence[int], p: int) -> List[Tuple[int, str, int, int]]:
    """Generators of ``prod GL(d_v, F_p)``: transvections and, over ``F_3``, a sign change."""
    out = []
    for v, d in enumerate(dims):
        out.extend((v, "add", i, j) for i in range(d) for j in range(d) if i != j)
        if p == 3:
            out.extend((v, "scale", i, 2) for i in range(d))
    return out


def _act(shape: _Shape, matrices: Sequence[IntMatrix], generator, p: int) -> List[IntMatrix]:
    """``X_a -> g X_a g^-1`` for a generator ``g`` at one vertex."""
    v, kind, i, j = generator
    out = []
    for (s, t), m in zip(shape.arrows, matrices):
        m = [list(row) for row in m]
        if t == v:
            if kind == "add":
                m[i] = [(a + b) % p for a, b in zip(m[i], m[j])]
            else:
                m[i] = [(a * j) % p for a in m[i]]
        if s == v:
            for row in m:
                if kind == "add":
                    row[j] = (row[j] - row[i]) % p
                else:
                    # 2 is its own inverse mod 3
                    row[i] = (row[i] * j) % p
        out.append(m)
    return out


def _orbit(shape: _Shape, state: Tuple[int, ...], generators, p: int) -> set:
    orbit = {state}
    pending = [state]
    while pending:
        matrices = shape.split(pending.pop())
        for g in generators:
            image = _Shape.join(_act(shape, matrices, g, p))
            if image not in orbit:
                orbit.add(image)
                pending.append(image)
    return orbit


def orbit_representatives(algebra: BasedAlgebra, dims: Sequence[int], max_states: int) -> List[Rep]:
    """
    One module per isomorphism class with dimension vector ``dims``: the
    lexicographically least arrow-matrix tuple of each base-change orbit.

    :raises CapTooLarge: when ``p ** E`` exceeds ``max_states``
    """
    p = algebra.field.p
    shape = _Shape(algebra, dims)
    if p**shape.entries > max_states:
        raise CapTooLarge(f"dimension vector {tuple(dims)} needs {p}^{shape.entries} states")
    relations = _relation_checks(algebra)
    generators = _generators(dims, p)
    seen: set = set()
    out = []
    names = [a.name for a in algebra.quiver.arrows]
    for state in itertools.product(range(p), repeat=shape.entries):
        if state in seen:
            continue
        matrices = shape.split(state)
        if not _satisfies(shape, matrices, relations, p):
            continue
        seen |= _orbit(shape, state, generators, p)
        out.append(Rep.from_matrices(algebra, dims, dict(zip(names, matrices))))
    return out


def _has_proper_idempotent(module: Rep) -> bool:
    basis = end_basis(module)
    field = module.field
    if field.p ** len(basis) > EXHAUSTIVE_LIMIT:
        raise CapTooLarge(f"End({module.label}) has {field.p}^{len(basis)} elements")
    identity = RepMap.identity(module)
    for coefficients in itertools.product(field.elements(), repeat=len(basis)):
        e = RepMap.zero(module, module)
        for c, f in zip(coefficients, basis):
            if c:
                e = e + f.scale(c)
        if e.is_zero() or e == identity:
            continue
        if e.compose(e) == e:
            return True
    return False


def _indecomposable(module: Rep, seed: int) -> bool:
    try:
        return is_indecomposable(module, seed)
    except NotSplitError:
        return not _has_proper_idempotent(module)


def enumerate_reps_upto_iso(
    algebra: BasedAlgebra, caps: Optional[EnumerationCaps] = None, seed: int = 0
) -> List[Rep]:
    """
    Every indecomposable module within the caps, once per isomorphism class.

    :raises CapTooLarge: when some dimension vector is beyond ``caps.max_states``
    """
    caps = caps or EnumerationCaps()
    field = algebra.field
    if field.kind != "prime" or field.p != caps.prime:
        raise ValueError(f"enumeration runs over F {caps.prime}, the algebra is over {field}")
    out: List[Rep] = []
    for dims in dimension_vectors(algebra.vertex_count, caps):
        count = 0
        for module in orbit_representatives(algebra, dims, caps.max_states):
            if _indecomposable(module, seed):
                out.append(module.relabel(f"M{''.join(map(str, dims))}.{count}"))
                count += 1
        if count:
            logging.debug("%d indecomposables of dimension vector %s", count, dims)
    logging.info("enumerated %d indecomposables up to total dimension %d", len(out), caps.max_total_dim)
    return out


def brute_bricks(algebra: BasedAlgebra, caps: Optional[EnumerationCaps] = None, seed: int = 0) -> List[Rep]:
    return [m for m in enumerate_reps_upto_iso(algebra, caps, seed) if is_brick(m, seed)]


def _dedupe(modules: Sequence[Rep], seed: int) -> List[Rep]:
    out: List[Rep] = []
    for m in modules:
        if not any(is_isomorphic(m, x, seed) for x in out):
            out.append(m)
    return out


def module_pool(algebra: BasedAlgebra, dim_cap: int = 4, seed: int = 0) -> List[Rep]:
    """
    Small test modules: the indecomposables up to ``dim_cap`` (enumerated over ``F_2``
    and ``F_3``, otherwise drawn from the standard modules, their tops, radicals and
    translates) followed by the sums of two of them that still fit the cap.
    """
    field = algebra.field
    indecomposables: List[Rep] = []
    if field.kind == "prime" and field.p in (2, 3):
        try:
            caps = EnumerationCaps(prime=field.p, max_total_dim=dim_cap)
            indecomposables = enumerate_reps_upto_iso(algebra, caps, seed)
        except CapTooLarge as e:
            logging.warning("falling back to standard modules for the pool: %s", e)
    if not indecomposables:
        std = standard_modules(algebra)
        candidates: List[Rep] = []
        for m in std.projectives + std.simples + std.injectives:
            candidates += [m, top(m)[0], radical_submodule(m)[0], tau(m)]
        pieces = [x for m in candidates if not m.is_zero() for x in decompose(m, seed)]
        indecomposables = _dedupe([x for x in pieces if x.total_dim <= dim_cap], seed)
    pool = list(indecomposables)
    for i, x in enumerate(indecomposables):
        for y in indecomposables[i:]:
            if x.total_dim + y.total_dim <= dim_cap:
                pool.append(direct_sum([x, y]))
    return pool

"""
Two-term complexes of projectives ``P1 -> P0``, minimal projective presentations,
the Nakayama functor and the homological dimensions built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from siltinglib.exactalg import EchelonBasis, Matrix, complement_indices
from siltinglib.quiveralg import BasedAlgebra, Element
from siltinglib.repmod.hom import hom_dim
from siltinglib.repmod.rep import Rep, RepMap, direct_sum, map_kernel_cokernel_image

Entries = Tuple[Tuple[Element, ...], ...]


@lru_cache(maxsize=None)
def _projective(algebra: BasedAlgebra, v: int) -> Rep:
    return Rep.projective(algebra, v)


@lru_cache(maxsize=None)
def _injective(algebra: BasedAlgebra, v: int) -> Rep:
    return Rep.injective(algebra, v)


def projective_sum(algebra: BasedAlgebra, vertices: Sequence[int]) -> Rep:
    """``⊕ e_v A`` over ``vertices`` in order."""
    return direct_sum([_projective(algebra, v) for v in vertices], algebra)


def injective_sum(algebra: BasedAlgebra, vertices: Sequence[int]) -> Rep:
    return direct_sum([_injective(algebra, v) for v in vertices], algebra)


def _left_multiplication_block(algebra: BasedAlgebra, c: Element, u: int, v: int, w: int) -> Matrix:
    """Vertex-``w`` matrix of ``e_u A -> e_v A, y -> c y`` for ``c`` in ``e_v A e_u``."""
    rows_index = algebra.peirce_indices(v, w)
    position = {k: r for r, k in enumerate(rows_index)}
    columns = algebra.peirce_indices(u, w)
    rows = [[algebra.field.zero] * len(columns) for _ in rows_index]
    for k, coefficient in enumerate(c):
        if not coefficient:
            continue
        for col, p in enumerate(columns):
            for t, value in algebra.basis_product(k, p).items():
                rows[position[t]][col] += coefficient * value
    return Matrix(algebra.field, len(rows_index), len(columns), tuple(tuple(r) for r in rows))


def _nakayama_block(algebra: BasedAlgebra, c: Element, u: int, v: int, w: int) -> Matrix:
    """Vertex-``w`` matrix of ``D(A e_u) -> D(A e_v), phi -> phi(- c)``."""
    rows_index = algebra.peirce_indices(w, v)
    columns = algebra.peirce_indices(w, u)
    position = {k: col for col, k in enumerate(columns)}
    rows = [[algebra.field.zero] * len(columns) for _ in rows_index]
    for r, p in enumerate(rows_index):
        for k, coefficient in enumerate(c):
            if not coefficient:
                continue
            for q, value in algebra.basis_product(p, k).items():
                rows[r][position[q]] += coefficient * value
    return Matrix(algebra.field, len(rows_index), len(columns), tuple(tuple(r) for r in rows))


def _assemble(algebra: BasedAlgebra, p1, p0, entries, block, source: Rep, target: Rep, dual: bool) -> RepMap:
    blocks = []
    for w in range(algebra.vertex_count):
        row_blocks = []
        for t, v in enumerate(p0):
            pieces = [block(algebra, entries[t][s], u, v, w) for s, u in enumerate(p1)]
            height = algebra.peirce_dim(w, v) if dual else algebra.peirce_dim(v, w)
            row_blocks.append(Matrix.hstack(algebra.field, height, pieces))
        blocks.append(Matrix.vstack(algebra.field, source.dims[w], row_blocks))
    return RepMap(source, target, tuple(blocks))


def compose_entries(algebra: BasedAlgebra, g: Entries, f: Entries) -> Entries:
    """Entries of ``g`` after ``f`` for maps between sums of indecomposable projectives."""
    if not g or not f:
        return tuple(() for _ in g)
    inner, columns = len(f), len(f[0])
    out = []
    for row in g:
        out_row = []
        for s in range(columns):
            acc = algebra.zero()
            for t in range(inner):
                acc = algebra.add(acc, algebra.multiply(row[t], f[t][s]))
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class TwoTermComplex:
    """
    A map ``⊕ e_{p1[s]} A -> ⊕ e_{p0[t]} A`` sending the generator of summand ``s``
    to ``sum_t entries[t][s]`` with ``entries[t][s]`` in ``e_{p0[t]} A e_{p1[s]}``.
    ``augmentation``, when known, is a map from the realised ``P0`` onto the cokernel module.
    """

    algebra: BasedAlgebra
    p1: Tuple[int, ...]
    p0: Tuple[int, ...]
    entries: Entries
    augmentation: Optional[RepMap] = None

    def __post_init__(self):
        if len(self.entries) != len(self.p0) or any(len(row) != len(self.p1) for row in self.entries):
            raise ValueError("differential shape does not match the projective terms")
        for t, v in enumerate(self.p0):
            for s, u in enumerate(self.p1):
                allowed = set(self.algebra.peirce_indices(v, u))
                for k, c in enumerate(self.entries[t][s]):
                    if c and k not in allowed:
                        raise ValueError(f"entry ({t},{s}) leaves e_{v} A e_{u}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoTermComplex):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.p1 == other.p1
            and self.p0 == other.p0
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.p1, self.p0, self.entries))

    def __repr__(self) -> str:
        return f"TwoTermComplex(p1={self.p1}, p0={self.p0})"

    @classmethod
    def stalk(cls, algebra: BasedAlgebra, p0: Sequence[int] = (), p1: Sequence[int] = ()) -> TwoTermComplex:
        """The complex with zero differential, e.g. ``(0 -> P)`` or ``(P -> 0)``."""
        entries = tuple(tuple(algebra.zero() for _ in p1) for _ in p0)
        return cls(algebra, tuple(p1), tuple(p0), entries)

    @classmethod
    def regular(cls, algebra: BasedAlgebra) -> TwoTermComplex:
        """``(0 -> A)``."""
        return cls.stalk(algebra, p0=range(algebra.vertex_count))

    @property
    def field(self):
        return self.algebra.field

    def is_zero(self) -> bool:
        return not self.p1 and not self.p0

    def gkey(self) -> Tuple[int, ...]:
        """The class ``[P0] - [P1]`` as a vector over the vertices."""
        n = self.algebra.vertex_count
        return tuple(self.p0.count(v) - self.p1.count(v) for v in range(n))

    def is_radical(self) -> bool:
        """Whether every entry lies in the arrow ideal, i.e. the presentation is minimal."""
        idempotents = {self.algebra.idempotent_index(v) for v in range(self.algebra.vertex_count)}
        return all(not row[s][k] for row in self.entries for s in range(len(self.p1)) for k in idempotents)

    def source(self) -> Rep:
        return projective_sum(self.algebra, self.p1)

    def target(self) -> Rep:
        return projective_sum(self.algebra, self.p0)

    def realise(self) -> RepMap:
        """The differential as a map of modules."""
        return _assemble(
            self.algebra, self.p1, self.p0, self.entries, _left_multiplication_block, self.source(), self.target(), False
        )

    def nakayama(self) -> RepMap:
        """``ν`` applied to the differential: a map ``ν P1 -> ν P0`` of injective modules."""
        source = injective_sum(self.algebra, self.p1)
        target = injective_sum(self.algebra, self.p0)
        return _assemble(self.algebra, self.p1, self.p0, self.entries, _nakayama_block, source, target, True)

    def cokernel(self) -> Rep:
        """``H^0``."""
        return map_kernel_cokernel_image(self.realise()).cokernel

    def homology(self) -> Tuple[Rep, Rep]:
        """``(H^-1, H^0)``."""
        kci = map_kernel_cokernel_image(self.realise())
        return kci.kernel, kci.cokernel

    def hom_map(self, module: Rep) -> Matrix:
        """
        ``Hom(P0, X) -> Hom(P1, X)`` in the coordinates ``Hom(e_v A, X) = X_v``:
        the tuple ``(x_t)`` goes to ``(sum_t x_t . entries[t][s])_s``.
        """
        field = self.field
        row_offsets, acc = [], 0
        for u in self.p1:
            row_offsets.append(acc)
            acc += module.dims[u]
        total_rows = acc
        col_offsets, acc = [], 0
        for v in self.p0:
            col_offsets.append(acc)
            acc += module.dims[v]
        total_cols = acc
        rows = [[field.zero] * total_cols for _ in range(total_rows)]
        for t, v in enumerate(self.p0):
            for s, u in enumerate(self.p1):
                for k, c in enumerate(self.entries[t][s]):
                    if not c:
                        continue
                    block = module.basis_matrix(k)
                    for i, row in enumerate(block.rows):
                        for j, value in enumerate(row):
                            if value:
                                rows[row_offsets[s] + i][col_offsets[t] + j] += c * value
        return Matrix(field, total_rows, total_cols, tuple(tuple(r) for r in rows))

    def direct_sum(self, *others: TwoTermComplex) -> TwoTermComplex:
        """Blockwise sum; augmentations are summed too when every part carries one."""
        parts = (self,) + others
        p1 = tuple(u for part in parts for u in part.p1)
        p0 = tuple(v for part in parts for v in part.p0)
        zero = self.algebra.zero()
        entries = []
        col_start = 0
        for part in parts:
            for row in part.entries:
                entries.append(
                    tuple([zero] * col_start + list(row) + [zero] * (len(p1) - col_start - len(part.p1)))
                )
            col_start += len(part.p1)
        augmentation = None
        if all(part.augmentation is not None for part in parts):
            augmentation = RepMap(
                projective_sum(self.algebra, p0),
                direct_sum([part.augmentation.target for part in parts], self.algebra),
                tuple(
                    Matrix.block_diagonal(self.field, [part.augmentation.blocks[w] for part in parts])
                    for w in range(self.algebra.vertex_count)
                ),
            )
        return TwoTermComplex(self.algebra, p1, p0, tuple(entries), augmentation)

    def to_dict(self) -> dict:
        names = self.algebra.quiver.vertices
        return {
            "p1": [names[u] for u in self.p1],
            "p0": [names[v] for v in self.p0],
            "differential": [[self.algebra.render(c) for c in row] for row in self.entries],
            "gkey": list(self.gkey()),
        }


def _top_generators(module: Rep) -> List[Tuple[int, tuple]]:
    field = module.field
    out = []
    for v, radical in enumerate(module.radical_bases()):
        d = module.dims[v]
        units = [tuple(field.one if i == j else field.zero for i in range(d)) for j in range(d)]
        for j in complement_indices(field, radical, units, d):
            out.append((v, units[j]))
    return out


def projective_cover(module: Rep) -> Tuple[Tuple[int, ...], RepMap]:
    """The vertices of the projective cover and the covering map onto ``module``."""
    algebra = module.algebra
    generators = _top_generators(module)
    vertices = tuple(v for v, _ in generators)
    cover = projective_sum(algebra, vertices)
    blocks = []
    for w in range(algebra.vertex_count):
        columns = []
        for v, g in generators:
            for k in algebra.peirce_indices(v, w):
                columns.append(module.basis_matrix(k).apply(g))
        blocks.append(Matrix.from_columns(module.field, columns, module.dims[w]))
    return vertices, RepMap(cover, module, tuple(blocks))


def syzygy(module: Rep) -> Tuple[Rep, RepMap, Tuple[int, ...], RepMap]:
    """``(ΩM, ΩM -> P0, vertices of P0, P0 -> M)``."""
    vertices, cover = projective_cover(module)
    kci = map_kernel_cokernel_image(cover)
    return kci.kernel, kci.kernel_inclusion, vertices, cover


def element_components(algebra: BasedAlgebra, p0: Sequence[int], w: int, vector: Sequence) -> List[Element]:
    """Splits a vertex-``w`` vector of ``⊕ e_{p0[t]} A`` into its algebra-element components."""
    out = []
    position = 0
    for v in p0:
        indices = algebra.peirce_indices(v, w)
        element = [algebra.field.zero] * algebra.dim
        for k in indices:
            element[k] = vector[position]
            position += 1
        out.append(tuple(element))
    return out


def min_proj_presentation(module: Rep) -> TwoTermComplex:
    """
    The minimal projective presentation ``P1 -> P0 -> M -> 0``; the covering map
    ``P0 -> M`` is kept as the augmentation.
    """
    algebra = module.algebra
    omega, inclusion, p0, cover = syzygy(module)
    generators = _top_generators(omega)
    p1 = tuple(w for w, _ in generators)
    columns = []
    for w, h in generators:
        columns.append(element_components(algebra, p0, w, inclusion.blocks[w].apply(h)))
    entries = tuple(tuple(columns[s][t] for s in range(len(p1))) for t in range(len(p0)))
    return TwoTermComplex(algebra, p1, p0, entries, cover)


def tau(module: Rep) -> Rep:
    """The Auslander-Reiten translate ``ker(ν P1 -> ν P0)``."""
    presentation = min_proj_presentation(module)
    kernel = map_kernel_cokernel_image(presentation.nakayama()).kernel
    return kernel.relabel(f"tau({module.label})" if module.label else None)


def ext1_dim(m: Rep, n: Rep) -> int:
    """``dim Hom(ΩM, N) - dim Hom(P0, N) + dim Hom(M, N)``."""
    omega, _, p0, _ = syzygy(m)
    return hom_dim(omega, n) - sum(n.dims[v] for v in p0) + hom_dim(m, n)


def tensor_dim(m: Rep, n: Rep) -> int:
    """
    ``dim M ⊗_A N`` for a right module ``m`` and a left module ``n`` given as a
    right module over the opposite algebra.
    """
    algebra = m.algebra
    if n.algebra is not algebra.opposite():
        raise ValueError("the left module must be a module over the opposite algebra")
    offsets, count = [], 0
    for v in range(algebra.vertex_count):
        offsets.append(count)
        count += m.dims[v] * n.dims[v]

    def var(v, i, j):
        return offsets[v] + i * n.dims[v] + j

    span = EchelonBasis(algebra.field, count)
    for a, arrow in enumerate(algebra.quiver.arrows):
        v, w = arrow.source, arrow.target
        x, y = m.arrow_maps[a], n.arrow_maps[a]
        for i in range(m.dims[v]):
            for j in range(n.dims[w]):
                vector = [algebra.field.zero] * count
                # (m_i . a) ⊗ n_j - m_i ⊗ (a . n_j)
                for k in range(m.dims[w]):
                    if x.rows[k][i]:
                        vector[var(w, k, j)] += x.rows[k][i]
                for l in range(n.dims[v]):
                    if y.rows[l][j]:
                        vector[var(v, i, l)] -= y.rows[l][j]
                span.add(vector)
    return count - len(span)


def tensor_and_tor1(m: Rep, n: Rep) -> Tuple[int, int]:
    """``(dim M ⊗_A N, dim Tor_1(M, N))`` from the sequence ``0 -> ΩM -> P0 -> M -> 0``."""
    omega, _, p0, _ = syzygy(m)
    tensor = tensor_dim(m, n)
    tor1 = tensor_dim(omega, n) - sum(n.dims[v] for v in p0) + tensor
    return tensor, tor1


def dual_module(module: Rep) -> Rep:
    """``D M`` as a right module over the opposite algebra."""
    opposite = module.algebra.opposite()
    maps = tuple(m.transpose() for m in module.arrow_maps)
    return Rep(opposite, module.dims, maps, f"D({module.label})" if module.label else None)


def is_projective(module: Rep) -> bool:
    omega, _, _, _ = syzygy(module)
    return omega.is_zero()



def dual_complex(sigma: TwoTermComplex) -> TwoTermComplex:
    """
    ``Hom_A(sigma, A)`` as a complex of right modules over the opposite algebra. The
    terms swap degrees and each entry keeps its coordinates, read as reversed paths.
    """
    entries = tuple(
        tuple(sigma.entries[t][s] for t in range(len(sigma.p0))) for s in range(len(sigma.p1))
    )
    return TwoTermComplex(sigma.algebra.opposite(), sigma.p0, sigma.p1, entries)


def transpose(module: Rep) -> Rep:
    """The Auslander-Bridger transpose: the cokernel of the dual of the minimal presentation."""
    transposed = dual_complex(min_proj_presentation(module)).cokernel()
    return transposed.relabel(f"Tr({module.label})" if module.label else None)

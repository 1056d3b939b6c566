"""Right modules over a based algebra, as representations of its quiver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from siltinglib.exactalg import EchelonBasis, Matrix, column_space, complement_indices, inverse, kernel_basis, rank, solve
from siltinglib.quiveralg import BasedAlgebra, Element, Path


@dataclass(frozen=True, eq=False)
class Rep:
    """
    A finite dimensional right module. The matrix of an arrow ``a: i -> j`` maps
    the vertex-``i`` space to the vertex-``j`` space, so it has shape ``(d_j, d_i)``
    and a path ``a1*...*ak`` acts by ``X_ak ... X_a1``.
    """

    algebra: BasedAlgebra
    dims: Tuple[int, ...]
    arrow_maps: Tuple[Matrix, ...]
    label: Optional[str] = None
    _paths: Dict[Path, Matrix] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        quiver = self.algebra.quiver
        if len(self.dims) != quiver.vertex_count or len(self.arrow_maps) != len(quiver.arrows):
            raise ValueError("dimension vector or arrow maps do not match the quiver")
        for arrow, m in zip(quiver.arrows, self.arrow_maps):
            if m.shape != (self.dims[arrow.target], self.dims[arrow.source]):
                raise ValueError(f"arrow {arrow.name!r} has shape {m.shape}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rep):
            return NotImplemented
        return self.algebra is other.algebra and self.dims == other.dims and self.arrow_maps == other.arrow_maps

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.dims, self.arrow_maps))

    def __repr__(self) -> str:
        name = f"{self.label} " if self.label else ""
        return f"Rep({name}dims={self.dims})"

    @classmethod
    def from_matrices(cls, algebra: BasedAlgebra, dims: Sequence[int], matrices: Dict[str, Sequence[Sequence]], label=None) -> Rep:
        """
        Builds a module from arrow names to row lists; missing arrows act by zero.

        :raises ValueError: for an unknown arrow, a misshapen matrix or matrices that
            violate a relation of ``algebra``
        """
        unknown = set(matrices) - {arrow.name for arrow in algebra.quiver.arrows}
        if unknown:
            raise ValueError(f"no arrows named {', '.join(sorted(unknown))}")
        if len(dims) != algebra.vertex_count:
            raise ValueError(f"{len(dims)} dimensions for {algebra.vertex_count} vertices")
        field_ = algebra.field
        maps = []
        for arrow in algebra.quiver.arrows:
            shape = (dims[arrow.target], dims[arrow.source])
            rows = matrices.get(arrow.name)
            if rows is None:
                maps.append(Matrix.zeros(field_, *shape))
            else:
                maps.append(Matrix.from_rows(field_, rows, shape[1]))
                if maps[-1].nrows != shape[0]:
                    raise ValueError(f"arrow {arrow.name} needs {shape[0]} rows, got {maps[-1].nrows}")
        module = cls(algebra, tuple(dims), tuple(maps), label)
        if not module.satisfies_relations():
            raise ValueError(f"matrices for dimensions {tuple(dims)} violate the relations")
        return module

    @classmethod
    def zero(cls, algebra: BasedAlgebra) -> Rep:
        return cls.from_matrices(algebra, [0] * algebra.vertex_count, {}, "0")

    @classmethod
    def simple(cls, algebra: BasedAlgebra, v: int) -> Rep:
        dims = [0] * algebra.vertex_count
        dims[v] = 1
        return cls.from_matrices(algebra, dims, {}, f"S{algebra.quiver.vertices[v]}")

    @classmethod
    def projective(cls, algebra: BasedAlgebra, v: int) -> Rep:
        """``e_v A`` with basis the paths starting at ``v``; arrows act by right multiplication."""
        n = algebra.vertex_count
        local = [algebra.peirce_indices(v, w) for w in range(n)]
        position = [{k: r for r, k in enumerate(ks)} for ks in local]
        maps = []
        for a, arrow in enumerate(algebra.quiver.arrows):
            rows = [[algebra.field.zero] * len(local[arrow.source]) for _ in local[arrow.target]]
            arrow_index = algebra.index_of(algebra.quiver.arrow_path(a))
            for c, k in enumerate(local[arrow.source]):
                for t, value in algebra.basis_product(k, arrow_index).items():
                    rows[position[arrow.target][t]][c] += value
            maps.append(Matrix(algebra.field, len(rows), len(local[arrow.source]), tuple(tuple(r) for r in rows)))
        return cls(algebra, tuple(len(ks) for ks in local), tuple(maps), f"P{algebra.quiver.vertices[v]}")

    @classmethod
    def injective(cls, algebra: BasedAlgebra, v: int) -> Rep:
        """``D(A e_v)``: vertex ``w`` carries the dual of the paths from ``w`` to ``v``."""
        n = algebra.vertex_count
        local = [algebra.peirce_indices(w, v) for w in range(n)]
        maps = []
        for a, arrow in enumerate(algebra.quiver.arrows):
            arrow_index = algebra.index_of(algebra.quiver.arrow_path(a))
            # (phi . a)(q) = phi(a q) for q a path from the target of a to v
            rows = []
            for q in local[arrow.target]:
                product = algebra.basis_product(arrow_index, q)
                rows.append([product.get(p, algebra.field.zero) for p in local[arrow.source]])
            maps.append(Matrix(algebra.field, len(rows), len(local[arrow.source]), tuple(tuple(r) for r in rows)))
        return cls(algebra, tuple(len(ks) for ks in local), tuple(maps), f"I{algebra.quiver.vertices[v]}")

    @classmethod
    def regular(cls, algebra: BasedAlgebra) -> Rep:
        module = direct_sum([cls.projective(algebra, v) for v in range(algebra.vertex_count)], algebra)
        return module.relabel("A")

    def relabel(self, label: Optional[str]) -> Rep:
        return Rep(self.algebra, self.dims, self.arrow_maps, label)

    @property
    def field(self):
        return self.algebra.field

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def offsets(self) -> List[int]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return out

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def arrow_map(self, name: str) -> Matrix:
        return self.arrow_maps[self.algebra.quiver.arrow_index(name)]

    def path_matrix(self, path: Path) -> Matrix:
        cached = self._paths.get(path)
        if cached is not None:
            return cached
        result = Matrix.identity(self.field, self.dims[path.source])
        for a in path.arrows:
            result = self.arrow_maps[a] @ result
        self._paths[path] = result
        return result

    def basis_matrix(self, k: int) -> Matrix:
        return self.path_matrix(self.algebra.basis[k])

    def act(self, vector: Sequence, x: Element) -> tuple:
        """``m . x`` for a flat coordinate vector ``m``."""
        return self.element_action(x).apply(vector)

    def element_action(self, x: Element) -> Matrix:
        """Matrix of ``m -> m . x`` on flat coordinate vectors."""
        n = self.total_dim
        rows = [[self.field.zero] * n for _ in range(n)]
        offsets = self.offsets
        for k, c in enumerate(x):
            if not c:
                continue
            path = self.algebra.basis[k]
            block = self.path_matrix(path)
            r0, c0 = offsets[path.target], offsets[path.source]
            for i, row in enumerate(block.rows):
                for j, value in enumerate(row):
                    if value:
                        rows[r0 + i][c0 + j] += c * value
        return Matrix(self.field, n, n, tuple(tuple(r) for r in rows))

    def satisfies_relations(self) -> bool:
        for relation in self.algebra.relations:
            total = None
            for c, path in relation.resolve(self.algebra.quiver):
                term = self.path_matrix(path).scale(self.field(c))
                total = term if total is None else total + term
            if total is not None and not total.is_zero():
                return False
        return True

    def radical_bases(self) -> List[List[tuple]]:
        """Per vertex, a basis of ``(M rad A)_v``: the span of the images of incoming arrows."""
        out = []
        quiver = self.algebra.quiver
        for v in range(len(self.dims)):
            incoming = [self.arrow_maps[a] for a in quiver.arrows_to(v)]
            columns = [col for m in incoming for col in m.columns()]
            basis = EchelonBasis(self.field, self.dims[v])
            out.append([col for col in columns if basis.add(col)])
        return out

    def top_dims(self) -> Tuple[int, ...]:
        return tuple(d - len(b) for d, b in zip(self.dims, self.radical_bases()))

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "dims": list(self.dims),
            "arrows": {a.name: m.render() for a, m in zip(self.algebra.quiver.arrows, self.arrow_maps)},
        }


@dataclass(frozen=True)
class RepMap:
    """A module homomorphism given by one matrix per vertex."""

    source: Rep
    target: Rep
    blocks: Tuple[Matrix, ...]

    @classmethod
    def zero(cls, source: Rep, target: Rep) -> RepMap:
        f = source.field
        return cls(source, target, tuple(Matrix.zeros(f, t, s) for s, t in zip(source.dims, target.dims)))

    @classmethod
    def identity(cls, module: Rep) -> RepMap:
        return cls(module, module, tuple(Matrix.identity(module.field, d) for d in module.dims))

    @classmethod
    def from_total(cls, source: Rep, target: Rep, total: Matrix) -> RepMap:
        so, to = source.offsets, target.offsets
        blocks = []
        for v in range(len(source.dims)):
            blocks.append(
                total.submatrix(range(to[v], to[v] + target.dims[v]), range(so[v], so[v] + source.dims[v]))
            )
        return cls(source, target, tuple(blocks))

    def total(self) -> Matrix:
        return Matrix.block_diagonal(self.source.field, self.blocks)

    def compose(self, other: RepMap) -> RepMap:
        """``self`` after ``other``."""
        return RepMap(other.source, self.target, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def __add__(self, other: RepMap) -> RepMap:
        return RepMap(self.source, self.target, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: RepMap) -> RepMap:
        return RepMap(self.source, self.target, tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c) -> RepMap:
        return RepMap(self.source, self.target, tuple(b.scale(c) for b in self.blocks))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def is_valid(self) -> bool:
        quiver = self.source.algebra.quiver
        for a, arrow in enumerate(quiver.arrows):
            left = self.target.arrow_maps[a] @ self.blocks[arrow.source]
            right = self.blocks[arrow.target] @ self.source.arrow_maps[a]
            if left != right:
                return False
        return True

    def rank(self) -> int:
        return sum(rank(b) for b in self.blocks)

    def is_injective(self) -> bool:
        return self.rank() == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.total_dim

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def inverse(self) -> RepMap:
        return RepMap(self.target, self.source, tuple(inverse(b) for b in self.blocks))

    def apply(self, vector: Sequence) -> tuple:
        return self.total().apply(vector)


def regular_basis_vector(algebra: BasedAlgebra, k: int) -> Tuple[int, tuple]:
    """The basis element ``k`` of ``A`` as a vector of the regular module, with its vertex."""
    path = algebra.basis[k]
    s, t = path.source, path.target
    offset = sum(algebra.peirce_dim(u, t) for u in range(s)) + algebra.peirce_indices(s, t).index(k)
    size = sum(algebra.peirce_dim(u, t) for u in range(algebra.vertex_count))
    return t, tuple(algebra.field.one if i == offset else algebra.field.zero for i in range(size))


def direct_sum(modules: Sequence[Rep], algebra: Optional[BasedAlgebra] = None) -> Rep:
    if not modules:
        if algebra is None:
            raise ValueError("the empty direct sum needs an algebra")
        return Rep.zero(algebra)
    algebra = modules[0].algebra
    dims = tuple(sum(m.dims[v] for m in modules) for v in range(algebra.vertex_count))
    maps = tuple(Matrix.block_diagonal(algebra.field, [m.arrow_maps[a] for m in modules]) for a in range(len(algebra.quiver.arrows)))
    label = "+".join(m.label or "?" for m in modules)
    return Rep(algebra, dims, maps, label)


def _stacked_identity(field_, dims_before: int, own: int, total: int) -> Matrix:
    rows = []
    for i in range(total):
        rows.append(tuple(field_.one if i - dims_before == j else field_.zero for j in range(own)))
    return Matrix(field_, total, own, tuple(rows))


def inclusions(modules: Sequence[Rep], total: Rep) -> List[RepMap]:
    out = []
    for k, m in enumerate(modules):
        blocks = []
        for v in range(len(total.dims)):
            before = sum(x.dims[v] for x in modules[:k])
            blocks.append(_stacked_identity(total.field, before, m.dims[v], total.dims[v]))
        out.append(RepMap(m, total, tuple(blocks)))
    return out


def projections(modules: Sequence[Rep], total: Rep) -> List[RepMap]:
    return [RepMap(total, i.source, tuple(b.transpose() for b in i.blocks)) for i in inclusions(modules, total)]


def subrep(module: Rep, bases: Sequence[Sequence[tuple]], label=None) -> Tuple[Rep, RepMap]:
    """
    The submodule with the given per-vertex bases (columns) and its inclusion.
    The span must be closed under the arrows.
    """
    field_ = module.field
    embeddings = [Matrix.from_columns(field_, list(b), module.dims[v]) for v, b in enumerate(bases)]
    maps = []
    for a, arrow in enumerate(module.algebra.quiver.arrows):
        image = module.arrow_maps[a] @ embeddings[arrow.source]
        coordinates = solve(embeddings[arrow.target], image)
        if coordinates is None:
            raise ValueError(f"span is not closed under arrow {arrow.name!r}")
        maps.append(coordinates)
    sub = Rep(module.algebra, tuple(len(b) for b in bases), tuple(maps), label)
    return sub, RepMap(sub, module, tuple(embeddings))


def generated_subrep(module: Rep, generators: Sequence[Sequence[tuple]], label=None) -> Tuple[Rep, RepMap]:
    """The smallest submodule containing the given per-vertex vectors."""
    quiver = module.algebra.quiver
    spans = [EchelonBasis(module.field, d) for d in module.dims]
    bases: List[List[tuple]] = [[] for _ in module.dims]
    pending = []
    for v, vectors in enumerate(generators):
        for vec in vectors:
            pending.append((v, tuple(vec)))
    while pending:
        v, vec = pending.pop()
        if not spans[v].add(vec):
            continue
        bases[v].append(vec)
        for a in quiver.arrows_from(v):
            pending.append((quiver.arrows[a].target, module.arrow_maps[a].apply(vec)))
    return subrep(module, bases, label)


def quotient_rep(module: Rep, bases: Sequence[Sequence[tuple]], label=None) -> Tuple[Rep, RepMap]:
    """The quotient by the submodule with the given per-vertex bases, and the projection."""
    field_ = module.field
    projections_, lifts = [], []
    for v, basis in enumerate(bases):
        d = module.dims[v]
        units = [tuple(field_.one if i == j else field_.zero for i in range(d)) for j in range(d)]
        keep = complement_indices(field_, basis, units, d)
        change = Matrix.from_columns(field_, list(basis) + [units[j] for j in keep], d)
        projections_.append(inverse(change).submatrix(range(len(basis), d), range(d)))
        lifts.append(Matrix.from_columns(field_, [units[j] for j in keep], d))
    maps = []
    for a, arrow in enumerate(module.algebra.quiver.arrows):
        maps.append(projections_[arrow.target] @ module.arrow_maps[a] @ lifts[arrow.source])
    dims = tuple(d - len(b) for d, b in zip(module.dims, bases))
    quotient = Rep(module.algebra, dims, tuple(maps), label)
    return quotient, RepMap(module, quotient, tuple(projections_))


class KernelCokernelImage(NamedTuple):
    kernel: Rep
    kernel_inclusion: RepMap
    cokernel: Rep
    cokernel_projection: RepMap
    image: Rep
    image_inclusion: RepMap


def map_kernel_cokernel_image(f: RepMap) -> KernelCokernelImage:
    kernel, kernel_inclusion = subrep(f.source, [kernel_basis(b) for b in f.blocks])
    image_bases = [column_space(b).columns() for b in f.blocks]
    image, image_inclusion = subrep(f.target, image_bases)
    cokernel, cokernel_projection = quotient_rep(f.target, image_bases)
    return KernelCokernelImage(kernel, kernel_inclusion, cokernel, cokernel_projection, image, image_inclusion)


def radical_submodule(module: Rep) -> Tuple[Rep, RepMap]:
    return subrep(module, module.radical_bases(), "rad")


def top(module: Rep) -> Tuple[Rep, RepMap]:
    return quotient_rep(module, module.radical_bases(), "top")


def change_basis(module: Rep, matrices: Sequence[Matrix]) -> Rep:
    """The isomorphic module ``g M g^-1`` for invertible per-vertex matrices ``g``."""
    inverses = [inverse(g) if g.nrows else g for g in matrices]
    maps = []
    for a, arrow in enumerate(module.algebra.quiver.arrows):
        maps.append(matrices[arrow.target] @ module.arrow_maps[a] @ inverses[arrow.source])
    return Rep(module.algebra, module.dims, tuple(maps), module.label)


class StandardModules(NamedTuple):
    projectives: List[Rep]
    simples: List[Rep]
    injectives: List[Rep]


def standard_modules(algebra: BasedAlgebra) -> StandardModules:
    n = algebra.vertex_count
    return StandardModules(
        [Rep.projective(algebra, v) for v in range(n)],
        [Rep.simple(algebra, v) for v in range(n)],
        [Rep.injective(algebra, v) for v in range(n)],
    )

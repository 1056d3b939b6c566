"""
Ring epimorphisms ``A -> B`` presented by a reflection ``η: A -> R`` of the regular
module: ``B = End_A(R)`` with the product ``b * b' = b ∘ b'``, and the unit sends
``a`` to the endomorphism taking ``η(1)`` to ``η(a)``.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from siltinglib.approx import VerificationFailed
from siltinglib.exactalg import EchelonBasis, FieldSpec, Matrix, column_space, rank, solve
from siltinglib.quiveralg import BasedAlgebra
from siltinglib.repmod import (
    Rep,
    RepMap,
    TwoTermComplex,
    end_basis,
    hom_basis,
    quotient_rep,
    regular_basis_vector,
    tensor_and_tor1,
    trace_submodule,
)

UNIVERSALITY_NOTE = (
    "only the σ-inverting clause of the universal localisation is verified; "
    "universality among σ-inverting ring maps is not machine-checked"
)


@dataclass(frozen=True)
class StructureAlgebra:
    """
    A finite dimensional algebra on an abstract basis: ``table[i][j]`` holds the
    coordinates of the product of basis elements ``i`` and ``j``.
    """

    field: FieldSpec
    dim: int
    table: Tuple[Tuple[tuple, ...], ...]
    one: tuple

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        out = [self.field.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def add(self, x: Sequence, y: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(x, y))

    def left_multiplication(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x * y`` in the basis."""
        zero, one = self.field.zero, self.field.one
        columns = [self.multiply(x, tuple(one if k == j else zero for k in range(self.dim))) for j in range(self.dim)]
        return Matrix.from_columns(self.field, columns, self.dim)

    def to_dict(self) -> dict:
        render = self.field.render
        return {
            "dim": self.dim,
            "one": [render(c) for c in self.one],
            "structure_constants": [
                [[render(c) for c in product] for product in row] for row in self.table
            ],
        }


@dataclass(frozen=True)
class EpiFlags:
    is_ring_hom: bool
    is_epimorphism: bool
    tor1_zero: bool
    sigma_inverting: Optional[bool]
    essential_image_consistent: Optional[bool] = None

    def failures(self) -> List[str]:
        """Names of the clauses that were checked and failed."""
        return [name for name, value in asdict(self).items() if value is False]

    def __bool__(self) -> bool:
        return not self.failures()

    def to_dict(self) -> Dict[str, Optional[bool]]:
        return asdict(self)


@dataclass(frozen=True)
class RingEpiPresentation:
    """
    The ring map ``A -> B`` together with the data it was built from. ``unit_images[k]``
    is the image of the ``k``-th basis path of ``A``; ``left_module`` is ``B`` as a left
    ``A``-module, i.e. a module over the opposite algebra.
    """

    algebra: BasedAlgebra
    reflection: Rep
    unit_map: RepMap
    b: StructureAlgebra
    unit_images: Tuple[tuple, ...]
    left_module: Rep
    sigma1: Optional[TwoTermComplex] = None
    semibrick: Tuple[Rep, ...] = ()
    flags: Optional[EpiFlags] = None
    note: str = UNIVERSALITY_NOTE

    @property
    def dim_b(self) -> int:
        return self.b.dim

    def unit(self, x: Sequence) -> tuple:
        """The image of an element of ``A`` in ``B``."""
        out = self.b.zero()
        for k, c in enumerate(x):
            if c:
                out = self.b.add(out, tuple(c * e for e in self.unit_images[k]))
        return out

    def to_dict(self) -> dict:
        return {
            "dim_B": self.b.dim,
            "B": self.b.to_dict(),
            "unit": [[self.b.field.render(c) for c in image] for image in self.unit_images],
            "reflection": self.reflection.to_dict(),
            "semibrick": [list(s.dims) for s in self.semibrick],
            "flags": self.flags.to_dict() if self.flags else None,
            "note": self.note,
        }


def _flat(blocks: Sequence[Sequence]) -> tuple:
    return tuple(e for block in blocks for e in block)


def _generator(eta: RepMap) -> tuple:
    """``η(1_A)`` as a flat vector of the reflection."""
    algebra = eta.source.algebra
    return _flat(
        eta.blocks[v].apply(regular_basis_vector(algebra, algebra.idempotent_index(v))[1])
        for v in range(algebra.vertex_count)
    )


def _image_of_basis_path(eta: RepMap, k: int) -> tuple:
    algebra = eta.source.algebra
    vertex, vector = regular_basis_vector(algebra, k)
    target = eta.target
    return _flat(
        eta.blocks[v].apply(vector) if v == vertex else (target.field.zero,) * target.dims[v]
        for v in range(algebra.vertex_count)
    )


def _piece(b: StructureAlgebra, idempotent: Sequence) -> Matrix:
    """Columns spanning ``idempotent * B``."""
    return column_space(b.left_multiplication(idempotent))


def _left_module(algebra: BasedAlgebra, b: StructureAlgebra, unit_images: Sequence[tuple]) -> Rep:
    """
    ``B`` as a left ``A``-module: vertex ``v`` carries ``unit(e_v) B`` and an arrow
    ``a: i -> j`` acts ``unit(e_j) B -> unit(e_i) B`` by left multiplication.
    """
    opposite = algebra.opposite()
    pieces = []
    for v in range(algebra.vertex_count):
        pieces.append(_piece(b, unit_images[algebra.idempotent_index(v)]))
    maps = []
    for a, arrow in enumerate(algebra.quiver.arrows):
        source, target = pieces[arrow.target], pieces[arrow.source]
        index = algebra.index_of(algebra.quiver.arrow_path(a))
        if not source.ncols or not target.ncols:
            maps.append(Matrix.zeros(b.field, target.ncols, source.ncols))
            continue
        moved = b.left_multiplication(unit_images[index]) @ source
        coordinates = solve(target, moved)
        if coordinates is None:
            raise VerificationFailed(f"unit({arrow.name}) does not map between the expected idempotent pieces")
        maps.append(coordinates)
    dims = tuple(piece.ncols for piece in pieces)
    return Rep(opposite, dims, tuple(maps), "B")


def presentation_from_reflection(
    eta: RepMap, sigma1: Optional[TwoTermComplex] = None, semibrick: Sequence[Rep] = ()
) -> RingEpiPresentation:
    """
    Builds ``B = End(R)`` for a map ``η: A -> R`` out of the regular module.

    :raises VerificationFailed: when evaluation at ``η(1)`` is not a bijection
        ``End(R) -> R``, so ``η`` is not a reflection onto ``R``
    """
    reflection = eta.target
    field_ = reflection.field
    basis = end_basis(reflection)
    generator = _generator(eta)
    size = reflection.total_dim
    if len(basis) != size:
        raise VerificationFailed(f"End(R) has dimension {len(basis)} but R has dimension {size}")
    evaluation = EchelonBasis(field_, size, track_coordinates=True)
    for phi in basis:
        if not evaluation.add(phi.apply(generator)):
            raise VerificationFailed("evaluation at η(1) is not injective on End(R)")

    def coordinates(vector: tuple) -> tuple:
        found = evaluation.coordinates(vector)
        if found is None:
            raise VerificationFailed("a vector of R is not reached by evaluation at η(1)")
        return tuple(found)

    table = tuple(
        tuple(coordinates(phi.apply(psi.apply(generator))) for psi in basis) for phi in basis
    )
    b = StructureAlgebra(field_, size, table, coordinates(generator))
    unit_images = tuple(coordinates(_image_of_basis_path(eta, k)) for k in range(eta.source.algebra.dim))
    algebra = eta.source.algebra
    logging.debug("reflection of dimension %d gives B of dimension %d", size, b.dim)
    return RingEpiPresentation(
        algebra,
        reflection,
        eta,
        b,
        unit_images,
        _left_module(algebra, b, unit_images),
        sigma1,
        tuple(semibrick),
    )


def is_ring_hom(presentation: RingEpiPresentation) -> bool:
    """The unit is unital and multiplicative on every pair of basis paths."""
    algebra, b = presentation.algebra, presentation.b
    if presentation.unit(algebra.one()) != b.one:
        return False
    images = presentation.unit_images
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            product = presentation.unit(algebra.multiply(algebra.basis_vector(i), algebra.basis_vector(j)))
            if b.multiply(images[i], images[j]) != product:
                return False
    return True


def is_sigma_inverting(presentation: RingEpiPresentation) -> Optional[bool]:
    """Whether ``σ ⊗_A B`` is bijective; ``None`` without a complex."""
    sigma = presentation.sigma1
    if sigma is None:
        return None
    b, algebra = presentation.b, presentation.algebra
    pieces = {
        v: _piece(b, presentation.unit_images[algebra.idempotent_index(v)]) for v in set(sigma.p0) | set(sigma.p1)
    }
    width = sum(pieces[u].ncols for u in sigma.p1)
    height = sum(pieces[v].ncols for v in sigma.p0)
    if width != height:
        return False
    if not width:
        return True
    rows = []
    for t, v in enumerate(sigma.p0):
        row = []
        for s, u in enumerate(sigma.p1):
            moved = b.left_multiplication(presentation.unit(sigma.entries[t][s])) @ pieces[u]
            block = solve(pieces[v], moved)
            if block is None:
                return False
            row.append(block)
        rows.append(Matrix.hstack(b.field, pieces[v].ncols, row))
    return rank(Matrix.vstack(b.field, width, rows)) == width


def in_essential_image(presentation: RingEpiPresentation, module: Rep) -> bool:
    """
    Whether the action on ``module`` factors through the unit, tested by evaluation
    ``Hom(R, module) -> module``, ``f -> f(η(1))``, being bijective.
    """
    generator = _generator(presentation.unit_map)
    values = [f.apply(generator) for f in hom_basis(presentation.reflection, module)]
    if len(values) != module.total_dim:
        return False
    if not values:
        return True
    return rank(Matrix.from_columns(module.field, values, module.total_dim)) == module.total_dim


def verify_ring_epi(
    presentation: RingEpiPresentation,
    pool: Iterable[Rep] = (),
    membership=None,
) -> EpiFlags:
    """
    Runs the checks in order: ring map, epimorphism through ``dim B ⊗_A B = dim B``,
    vanishing of ``Tor_1(B, B)``, ``σ``-inversion and, given ``membership`` and a
    ``pool``, agreement of the essential image with ``membership`` on the pool.
    """
    ring_hom = is_ring_hom(presentation)
    tensor, tor1 = tensor_and_tor1(presentation.reflection, presentation.left_module)
    consistent = None
    pool = list(pool)
    if membership is not None and pool:
        consistent = all(in_essential_image(presentation, x) == membership(x) for x in pool)
    flags = EpiFlags(ring_hom, tensor == presentation.b.dim, tor1 == 0, is_sigma_inverting(presentation), consistent)
    if not flags:
        logging.warning("ring map of dimension %d fails %s", presentation.b.dim, ", ".join(flags.failures()))
    return flags


def surjection_witness(algebra: BasedAlgebra) -> RingEpiPresentation:
    """The projection ``A -> A / rad A``, with its flags."""
    regular = Rep.regular(algebra)
    _, projection = quotient_rep(regular, regular.radical_bases(), "A/rad")
    presentation = presentation_from_reflection(projection)
    return replace(presentation, flags=verify_ring_epi(presentation))


def idempotent_quotient(algebra: BasedAlgebra, vertices: Iterable[int]) -> RingEpiPresentation:
    """``A -> A / AeA`` for the idempotent ``e`` summing the given vertices; it inverts ``P_v -> 0``."""
    vertices = sorted(set(vertices))
    regular = Rep.regular(algebra)
    spans: List[List[tuple]] = [[] for _ in regular.dims]
    for v in vertices:
        _, inclusion = trace_submodule(Rep.projective(algebra, v), regular)
        for w, block in enumerate(inclusion.blocks):
            spans[w].extend(block.columns())
    closure = [column_space(Matrix.from_columns(regular.field, s, regular.dims[w])).columns() if s else [] for w, s in enumerate(spans)]
    _, projection = quotient_rep(regular, closure, "A/AeA")
    sigma = TwoTermComplex.stalk(algebra, p1=vertices)
    presentation = presentation_from_reflection(projection, sigma)
    return replace(presentation, flags=verify_ring_epi(presentation))

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from siltinglib.exactalg import EchelonBasis, Matrix
from siltinglib.repmod import (
    NotSplitError,
    Rep,
    RepMap,
    decompose,
    direct_sum,
    group_isomorphic,
    hom_basis,
    local_radical,
    map_kernel_cokernel_image,
)


@dataclass(frozen=True)
class ApproximationResult:
    """
    A left ``add U``-approximation ``X -> U0`` with ``U0`` the direct sum of
    ``summands`` in order.
    """

    map: RepMap
    cokernel: Rep
    minimal: bool
    summands: tuple

    @property
    def target(self) -> Rep:
        return self.map.target


def basic_summands(module: Rep, seed: int = 0, known: Sequence[Rep] = ()) -> List[Rep]:
    """One indecomposable summand per isomorphism class; copies of ``known`` are split off first."""
    return [m for m, _ in group_isomorphic(decompose(module, seed, known=known), seed)]


def _assemble(source: Rep, chosen: Sequence[tuple]) -> ApproximationResult:
    algebra = source.algebra
    target = direct_sum([u for u, _ in chosen], algebra)
    blocks = tuple(
        Matrix.vstack(source.field, source.dims[v], [h.blocks[v] for _, h in chosen])
        for v in range(algebra.vertex_count)
    )
    f = RepMap(source, target, blocks)
    return ApproximationResult(f, map_kernel_cokernel_image(f).cokernel, False, tuple(u for u, _ in chosen))


def left_add_approximation(
    x: Rep, u: Rep, minimal: bool = True, seed: int = 0, classes: Optional[Sequence[Rep]] = None
) -> ApproximationResult:
    """
    A left ``add u``-approximation of ``x``.

    The minimal one takes, for each indecomposable ``U_i`` of ``u``, maps ``x -> U_i``
    forming a basis of ``Hom(x, U_i)`` modulo the maps factoring through radical maps
    ``U_j -> U_i``; the non-minimal one takes a full Hom basis for every summand of ``u``.

    ``classes``, when given, are pairwise non-isomorphic indecomposables with ``add u``
    equal to their ``add``; ``u`` is then not decomposed.

    :raises NotSplitError: when a summand of ``u`` has a non-split local endomorphism ring
    """
    if not minimal:
        chosen = [(ui, h) for ui in decompose(u, seed) for h in hom_basis(x, ui)]
        return _assemble(x, chosen)

    if classes is None:
        classes = basic_summands(u, seed)
    homs = [hom_basis(x, ui) for ui in classes]
    chosen = []
    for i, ui in enumerate(classes):
        radical = local_radical(ui)
        if radical is None:
            raise NotSplitError(f"End({ui.label}) is not split local")
        span = EchelonBasis(x.field, x.total_dim * ui.total_dim)
        for j, uj in enumerate(classes):
            through = radical if i == j else hom_basis(uj, ui)
            for r in through:
                for h in homs[j]:
                    span.add(r.compose(h).total().flatten())
        for h in homs[i]:
            if span.add(h.total().flatten()):
                chosen.append((ui, h))
    result = _assemble(x, chosen)
    return ApproximationResult(result.map, result.cokernel, True, result.summands)


def has_approximation_property(result: ApproximationResult, u: Rep, seed: int = 0) -> bool:
    """Every map from the source to a summand of ``u`` factors through ``result.map``."""
    f = result.map
    for ui in basic_summands(u, seed):
        span = EchelonBasis(f.source.field, f.source.total_dim * ui.total_dim)
        for g in hom_basis(f.target, ui):
            span.add(g.compose(f).total().flatten())
        for h in hom_basis(f.source, ui):
            if not span.contains(h.total().flatten()):
                return False
    return True


def minimalise(result: ApproximationResult, u: Rep, seed: int = 0) -> ApproximationResult:
    """
    Deletes summands of the target, in a seeded random order, while the approximation
    property persists.
    """
    source = result.map.source
    n = source.algebra.vertex_count
    start = [0] * n
    chosen = []
    for summand in result.summands:
        blocks = tuple(
            result.map.blocks[v].submatrix(range(start[v], start[v] + summand.dims[v]), range(source.dims[v]))
            for v in range(n)
        )
        start = [start[v] + summand.dims[v] for v in range(n)]
        chosen.append((summand, RepMap(source, summand, blocks)))
    order = list(range(len(chosen)))
    random.Random(seed).shuffle(order)
    for k in order:
        trial = [c for i, c in enumerate(chosen) if c is not None and i != k]
        if has_approximation_property(_assemble(source, trial), u, seed):
            chosen[k] = None
    kept = [c for c in chosen if c is not None]
    logging.debug("minimalised approximation from %d to %d summands", len(result.summands), len(kept))
    final = _assemble(source, kept)
    return ApproximationResult(final.map, final.cokernel, True, final.summands)

"""Projective objects of a wide subcategory, grown from its simples by universal extensions."""

from __future__ import annotations

import logging
from typing import List, Sequence

from siltinglib.exactalg import Matrix, complement_indices
from siltinglib.repmod import Rep, RepMap, direct_sum, hom_basis, map_kernel_cokernel_image, syzygy

DEFAULT_TOWER_STEPS = 32


class TowerDiverged(Exception):
    """Raised when an extension tower outgrows its dimension or step cap."""


def _ext1_classes(omega: Rep, inclusion: RepMap, brick: Rep) -> List[RepMap]:
    candidates = hom_basis(omega, brick)
    if not candidates:
        return []
    restricted = [h.compose(inclusion).total().flatten() for h in hom_basis(inclusion.target, brick)]
    keep = complement_indices(
        brick.field,
        restricted,
        [c.total().flatten() for c in candidates],
        omega.total_dim * brick.total_dim,
    )
    return [candidates[i] for i in keep]


def ext1_representatives(module: Rep, brick: Rep) -> List[RepMap]:
    """Maps ``ΩM -> brick`` whose classes form a basis of ``Ext¹(M, brick)``."""
    omega, inclusion, _, _ = syzygy(module)
    return _ext1_classes(omega, inclusion, brick)


def universal_extension(module: Rep, brick: Rep) -> Rep:
    """
    The middle term of ``0 -> brick^e -> E -> module -> 0`` whose connecting map hits
    all of ``Ext¹(module, brick)``; ``module`` itself when that group vanishes.

    ``E`` is the pushout of ``0 -> ΩM -> P0 -> M -> 0`` along the representatives,
    i.e. the cokernel of ``ΩM -> P0 ⊕ brick^e``.
    """
    omega, inclusion, _, _ = syzygy(module)
    xis = _ext1_classes(omega, inclusion, brick)
    if not xis:
        return module
    field = module.field
    target = direct_sum([inclusion.target] + [brick] * len(xis), module.algebra)
    minus_one = -field.one
    blocks = tuple(
        Matrix.vstack(
            field,
            omega.dims[v],
            [inclusion.blocks[v]] + [xi.scale(minus_one).blocks[v] for xi in xis],
        )
        for v in range(len(omega.dims))
    )
    return map_kernel_cokernel_image(RepMap(omega, target, blocks)).cokernel


def wide_projective(
    simple: Rep, semibrick: Sequence[Rep], max_dim: int, depth_cap: int = DEFAULT_TOWER_STEPS
) -> Rep:
    """
    The projective cover of ``simple`` inside the wide subcategory filtered by
    ``semibrick``: extend by members of the semibrick until ``Ext¹`` into each vanishes.

    :raises TowerDiverged: past ``max_dim`` total dimension or ``depth_cap`` extensions
    """
    current = simple
    steps = 0
    while True:
        for brick in semibrick:
            extended = universal_extension(current, brick)
            if extended is not current:
                break
        else:
            label = f"Q({simple.label})" if simple.label else None
            logging.debug("wide projective of dimension %d after %d extensions", current.total_dim, steps)
            return current.relabel(label)
        current = extended
        steps += 1
        if current.total_dim > max_dim:
            raise TowerDiverged(f"extension of dimension {current.total_dim} exceeds {max_dim}")
        if steps > depth_cap:
            raise TowerDiverged(f"no projective after {depth_cap} extensions")

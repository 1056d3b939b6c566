"""
Operations on two-term complexes of projectives: cones, cancellation of
contractible summands, chain maps into a shift modulo homotopy and the
subcategories ``D_σ`` and ``X_σ`` cut out by a complex.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

from siltinglib.exactalg import complement_indices, rank, solve_vector
from siltinglib.quiveralg import BasedAlgebra, Element
from siltinglib.repmod import (
    Rep,
    RepMap,
    TwoTermComplex,
    compose_entries,
    element_components,
    is_isomorphic,
    min_proj_presentation,
    regular_basis_vector,
)

Entries = Tuple[Tuple[Element, ...], ...]


class LiftFailure(Exception):
    """Raised when a map into the cokernel of a presentation does not lift to its degree-zero term."""


def _unit_inverse(algebra: BasedAlgebra, c: Element, u: int) -> Optional[Element]:
    """The inverse of ``c`` in ``e_u A e_u`` when ``c`` is a unit there."""
    lam = c[algebra.idempotent_index(u)]
    if not lam:
        return None
    inv = algebra.field.one / lam
    e = algebra.idempotent(u)
    step = algebra.scale(-inv, algebra.add(c, algebra.scale(-lam, e)))
    # geometric series of a nilpotent element
    total, term = algebra.zero(), e
    while any(term):
        total = algebra.add(total, term)
        term = algebra.multiply(term, step)
    return algebra.scale(inv, total)


def _find_unit(algebra: BasedAlgebra, p1, p0, rows) -> Optional[Tuple[int, int, Element]]:
    for t, v in enumerate(p0):
        for s, u in enumerate(p1):
            if u != v:
                continue
            inverse = _unit_inverse(algebra, rows[t][s], u)
            if inverse is not None:
                return t, s, inverse
    return None


def prune(sigma: TwoTermComplex) -> TwoTermComplex:
    """
    Splits off contractible summands ``(P = P)`` until every entry of the differential
    lies in the radical. The augmentation is not carried over.
    """
    algebra = sigma.algebra
    minus_one = -algebra.field.one
    p1, p0 = list(sigma.p1), list(sigma.p0)
    rows = [list(row) for row in sigma.entries]
    removed = 0
    while True:
        pivot = _find_unit(algebra, p1, p0, rows)
        if pivot is None:
            break
        t0, s0, c_inv = pivot
        for t in range(len(p0)):
            if t == t0 or not any(rows[t][s0]):
                continue
            factor = algebra.multiply(rows[t][s0], c_inv)
            for s in range(len(p1)):
                if s != s0:
                    correction = algebra.multiply(factor, rows[t0][s])
                    rows[t][s] = algebra.add(rows[t][s], algebra.scale(minus_one, correction))
        del rows[t0], p0[t0], p1[s0]
        for row in rows:
            del row[s0]
        removed += 1
    if removed:
        logging.debug("pruned %d contractible summands", removed)
    return TwoTermComplex(algebra, tuple(p1), tuple(p0), tuple(tuple(row) for row in rows))


def presentation_of_sum(modules: Sequence[Rep], algebra: BasedAlgebra) -> TwoTermComplex:
    """The direct sum of minimal presentations, augmented onto the direct sum of ``modules``."""
    if not modules:
        zero = Rep.zero(algebra)
        return TwoTermComplex(algebra, (), (), (), RepMap.zero(zero, zero))
    parts = [min_proj_presentation(m) for m in modules]
    return parts[0].direct_sum(*parts[1:])


def cone_presentation(f: RepMap, sigma0: TwoTermComplex) -> TwoTermComplex:
    """
    Lifts ``f: A -> T0`` through the augmentation of ``sigma0`` to a chain map from
    ``(0 -> A)`` and returns its pruned mapping cone, whose cokernel is ``coker f``.

    :param f: a map out of the regular module
    :param sigma0: a presentation of ``f.target`` carrying its augmentation
    :raises LiftFailure: when some ``f(e_v)`` has no preimage in ``P0``
    """
    algebra = sigma0.algebra
    augmentation = sigma0.augmentation
    if augmentation is None:
        raise ValueError("the presentation carries no augmentation")
    if augmentation.target != f.target:
        raise ValueError("the presentation does not present the target of the map")
    n = algebra.vertex_count
    lifted = []
    for v in range(n):
        image = f.blocks[v].apply(regular_basis_vector(algebra, algebra.idempotent_index(v))[1])
        preimage = solve_vector(augmentation.blocks[v], image)
        if preimage is None:
            raise LiftFailure(f"f(e_{algebra.quiver.vertices[v]}) does not lift")
        lifted.append(element_components(algebra, sigma0.p0, v, preimage))
    entries = tuple(
        tuple(lifted[v][t] for v in range(n)) + sigma0.entries[t] for t in range(len(sigma0.p0))
    )
    cone = TwoTermComplex(algebra, tuple(range(n)) + sigma0.p1, sigma0.p0, entries)
    return prune(cone)


def _coordinates(algebra: BasedAlgebra, rows: Sequence[int], columns: Sequence[int]) -> List[Tuple[int, int, int]]:
    return [
        (t, s, k)
        for t, v in enumerate(rows)
        for s, u in enumerate(columns)
        for k in algebra.peirce_indices(v, u)
    ]


def _elementary(algebra: BasedAlgebra, rows: Sequence[int], columns: Sequence[int]) -> List[Entries]:
    zero = algebra.zero()
    out = []
    for t0, s0, k in _coordinates(algebra, rows, columns):
        unit = algebra.basis_vector(k)
        out.append(
            tuple(
                tuple(unit if (t, s) == (t0, s0) else zero for s in range(len(columns)))
                for t in range(len(rows))
            )
        )
    return out


def _flatten(entries: Entries, coordinates: Sequence[Tuple[int, int, int]]) -> tuple:
    return tuple(entries[t][s][k] for t, s, k in coordinates)


def shifted_hom_basis(sigma: TwoTermComplex, tau: TwoTermComplex) -> List[Entries]:
    """
    Representatives of a basis of chain maps ``sigma -> tau[1]`` modulo homotopy.

    Such a map is any ``h: sigma.P1 -> tau.P0``; it is null-homotopic exactly when
    ``h = tau.d s1 + s0 sigma.d`` for some ``s1: sigma.P1 -> tau.P1`` and ``s0: sigma.P0 -> tau.P0``.
    """
    if sigma.algebra is not tau.algebra:
        raise ValueError("complexes over different algebras")
    algebra = sigma.algebra
    coordinates = _coordinates(algebra, tau.p0, sigma.p1)
    homotopies = [
        _flatten(compose_entries(algebra, tau.entries, s1), coordinates)
        for s1 in _elementary(algebra, tau.p1, sigma.p1)
    ]
    homotopies += [
        _flatten(compose_entries(algebra, s0, sigma.entries), coordinates)
        for s0 in _elementary(algebra, tau.p0, sigma.p0)
    ]
    candidates = _elementary(algebra, tau.p0, sigma.p1)
    keep = complement_indices(
        algebra.field, homotopies, [_flatten(c, coordinates) for c in candidates], len(coordinates)
    )
    return [candidates[i] for i in keep]


def is_presilting(sigma: TwoTermComplex) -> bool:
    """Whether every chain map ``sigma -> sigma[1]`` is null-homotopic."""
    return not shifted_hom_basis(sigma, sigma)


def d_sigma_membership(sigma: TwoTermComplex, module: Rep) -> bool:
    """Whether ``Hom(sigma, module)`` is surjective, i.e. ``module`` lies in ``D_σ``."""
    phi = sigma.hom_map(module)
    return phi.nrows == 0 or rank(phi) == phi.nrows


def x_sigma_membership(sigma: TwoTermComplex, module: Rep) -> bool:
    """Whether ``Hom(sigma, module)`` is bijective, i.e. ``module`` lies in ``X_σ``."""
    phi = sigma.hom_map(module)
    if phi.nrows != phi.ncols:
        return False
    return phi.nrows == 0 or rank(phi) == phi.nrows


def homotopy_invariants_agree(sigma: TwoTermComplex, tau: TwoTermComplex, seed: int = 0) -> bool:
    """
    Compares the pruned forms of two complexes: their projective terms and both
    cohomology modules. Homotopy equivalent complexes always agree.
    """
    sigma, tau = prune(sigma), prune(tau)
    if sorted(sigma.p1) != sorted(tau.p1) or sorted(sigma.p0) != sorted(tau.p0):
        return False
    (k1, c1), (k2, c2) = sigma.homology(), tau.homology()
    return is_isomorphic(c1, c2, seed) and is_isomorphic(k1, k2, seed)

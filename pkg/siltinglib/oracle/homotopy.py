"""Hom spaces in the homotopy category of two-term complexes, computed from module maps."""

from __future__ import annotations

from typing import List

from siltinglib.exactalg import EchelonBasis, Matrix, kernel_basis, span_rank
from siltinglib.repmod import RepMap, TwoTermComplex, hom_basis


def _flat(f: RepMap) -> tuple:
    return f.total().flatten()


def _size(maps: List[RepMap]) -> int:
    return maps[0].source.total_dim * maps[0].target.total_dim if maps else 0


def _shifted(sigma: TwoTermComplex, tau: TwoTermComplex) -> int:
    d_sigma, d_tau = sigma.realise(), tau.realise()
    maps = hom_basis(d_sigma.source, d_tau.target)
    if not maps:
        return 0
    size = d_sigma.source.total_dim * d_tau.target.total_dim
    homotopies = [_flat(d_tau.compose(s)) for s in hom_basis(d_sigma.source, d_tau.source)]
    homotopies += [_flat(s.compose(d_sigma)) for s in hom_basis(d_sigma.target, d_tau.target)]
    return len(maps) - span_rank(sigma.field, homotopies, size)


def _unshifted(sigma: TwoTermComplex, tau: TwoTermComplex) -> int:
    d_sigma, d_tau = sigma.realise(), tau.realise()
    field = sigma.field
    ones = hom_basis(d_sigma.source, d_tau.source)
    zeros = hom_basis(d_sigma.target, d_tau.target)
    if not ones and not zeros:
        return 0
    # columns: d_tau f1 for f1 in ones, then -f0 d_sigma for f0 in zeros
    size = d_sigma.source.total_dim * d_tau.target.total_dim
    columns = [_flat(d_tau.compose(f1)) for f1 in ones]
    columns += [_flat(f0.compose(d_sigma).scale(-field.one)) for f0 in zeros]
    system = Matrix.from_columns(field, columns, size)
    cycles = kernel_basis(system)
    one_coordinates = EchelonBasis(field, _size(ones), track_coordinates=True)
    for f in ones:
        one_coordinates.add(_flat(f))
    zero_coordinates = EchelonBasis(field, _size(zeros), track_coordinates=True)
    for f in zeros:
        zero_coordinates.add(_flat(f))
    boundaries = []
    for h in hom_basis(d_sigma.target, d_tau.source):
        first = one_coordinates.coordinates(_flat(h.compose(d_sigma))) if ones else []
        second = zero_coordinates.coordinates(_flat(d_tau.compose(h))) if zeros else []
        boundaries.append(tuple(first) + tuple(second))
    return len(cycles) - span_rank(field, boundaries, len(columns))


def homotopy_hom_dim(sigma: TwoTermComplex, tau: TwoTermComplex, shift: int = 1) -> int:
    """
    ``dim Hom(sigma, tau[shift])`` in the homotopy category for ``shift`` 0 or 1: chain
    maps solved from one linear system, null-homotopic ones spanned from another.
    """
    if sigma.algebra is not tau.algebra:
        raise ValueError("complexes over different algebras")
    if shift == 1:
        return _shifted(sigma, tau)
    if shift == 0:
        return _unshifted(sigma, tau)
    raise ValueError(f"two-term complexes only have maps in shifts 0 and 1, not {shift}")

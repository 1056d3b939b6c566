from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from siltinglib.approx.approximation import basic_summands
from siltinglib.approx.complexes import d_sigma_membership, is_presilting, prune, shifted_hom_basis
from siltinglib.quiveralg import BasedAlgebra
from siltinglib.repmod import Rep, TwoTermComplex, direct_sum, hom_dim, in_gen, tau


class NotPresilting(Exception):
    """Raised when a complex to be completed admits a chain map to its shift that is not null-homotopic."""


class VerificationFailed(Exception):
    """Raised when a constructed completion fails its support τ-tilting checks."""


@dataclass(frozen=True)
class CompletedPair:
    """
    A basic support τ-tilting pair: the indecomposable ``summands`` of the module and
    the vertices ``support`` whose projectives form the second component.
    """

    algebra: BasedAlgebra
    summands: Tuple[Rep, ...]
    support: FrozenSet[int]
    presentation: TwoTermComplex

    def module(self) -> Rep:
        return direct_sum(self.summands, self.algebra)


def _universal_complex(sigma1: TwoTermComplex) -> TwoTermComplex:
    """
    The cocone ``E`` of the universal map ``sigma1^r -> A[1]`` built from a basis of
    chain maps modulo homotopy.
    """
    algebra = sigma1.algebra
    n = algebra.vertex_count
    phis = shifted_hom_basis(sigma1, TwoTermComplex.regular(algebra))
    r, width = len(phis), len(sigma1.p1)
    zero = algebra.zero()
    rows = []
    for k in range(r):
        for row in sigma1.entries:
            rows.append((zero,) * (k * width) + tuple(row) + (zero,) * ((r - k - 1) * width))
    for v in range(n):
        rows.append(tuple(phis[k][v][s] for k in range(r) for s in range(width)))
    logging.debug("universal extension uses %d chain maps", r)
    return TwoTermComplex(algebra, sigma1.p1 * r, sigma1.p0 * r + tuple(range(n)), tuple(rows))


def verify_completion(pair: CompletedPair, sigma1: TwoTermComplex, pool: Optional[Iterable[Rep]] = None) -> None:
    """
    :raises VerificationFailed: when the pair is not τ-rigid, has the wrong number of
        summands, or generates a class other than ``D_σ1`` on ``pool``
    """
    module = pair.module()
    n = pair.algebra.vertex_count
    if len(pair.summands) + len(pair.support) != n:
        raise VerificationFailed(f"{len(pair.summands)} summands and {len(pair.support)} projectives for {n} vertices")
    if any(module.dims[v] for v in pair.support):
        raise VerificationFailed("module does not vanish on the projective component")
    if hom_dim(module, tau(module)):
        raise VerificationFailed("completion is not τ-rigid")
    for x in pool or ():
        if in_gen(module, x) != d_sigma_membership(sigma1, x):
            raise VerificationFailed(f"generated class and D_σ disagree on {x!r}")


def bongartz_complete(
    sigma1: TwoTermComplex, pool: Optional[Iterable[Rep]] = None, seed: int = 0
) -> CompletedPair:
    """
    The Bongartz completion of a presilting complex: the degree-zero cohomology of
    ``E ⊕ sigma1`` where ``A -> E -> sigma1^r -> A[1]`` is the universal triangle.

    :param pool: modules on which ``gen`` of the result is compared with ``D_σ1``
    :raises NotPresilting: when ``sigma1`` is not presilting
    :raises VerificationFailed: when the result is not a support τ-tilting pair
    """
    if not is_presilting(sigma1):
        raise NotPresilting(repr(sigma1))
    algebra = sigma1.algebra
    completed = _universal_complex(sigma1).direct_sum(sigma1)
    module = completed.cokernel()
    pair = CompletedPair(
        algebra,
        tuple(basic_summands(module, seed, known=basic_summands(sigma1.cokernel(), seed))),
        frozenset(v for v in range(algebra.vertex_count) if not module.dims[v]),
        prune(completed),
    )
    try:
        verify_completion(pair, sigma1, pool)
    except VerificationFailed:
        logging.error("Bongartz completion of %r failed verification", sigma1)
        raise
    return pair

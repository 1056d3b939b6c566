"""Completions of almost complete pairs and mutation between them."""

from __future__ import annotations

import logging
from typing import Iterable, List, Sequence

from siltinglib.approx import basic_summands, bongartz_complete, left_add_approximation
from siltinglib.quiveralg import BasedAlgebra
from siltinglib.repmod import (
    Rep,
    TwoTermComplex,
    direct_sum,
    in_gen,
    is_isomorphic,
    is_projective,
    min_proj_presentation,
    transpose,
)
from siltinglib.tautilt.pair import SiltingPair, validate_pair


class MutationFailed(Exception):
    """Raised when mutation does not produce a different valid pair."""


def bongartz_pair(algebra: BasedAlgebra, summands: Sequence[Rep], support: Iterable[int], seed: int = 0) -> SiltingPair:
    """The completion of ``(U, Q)`` with the largest torsion class ``⊥τU ∩ Q⊥``."""
    presentations = [min_proj_presentation(m) for m in summands]
    sigma = TwoTermComplex.stalk(algebra, p1=sorted(support))
    sigma = sigma.direct_sum(*presentations)
    return SiltingPair.from_completed(bongartz_complete(sigma, seed=seed))


def co_bongartz_pair(algebra: BasedAlgebra, summands: Sequence[Rep], seed: int = 0) -> SiltingPair:
    """
    The completion of ``(U, Q)`` with the smallest torsion class ``Fac U``: the basic part of
    ``U ⊕ U0 ⊕ coker f`` for the minimal left ``add U``-approximation ``f: A -> U0``.
    """
    u = direct_sum(summands, algebra)
    approximation = left_add_approximation(Rep.regular(algebra), u, seed=seed)
    module = direct_sum([u, approximation.target, approximation.cokernel], algebra)
    support = [v for v in range(algebra.vertex_count) if not module.dims[v]]
    return SiltingPair.from_summands(algebra, basic_summands(module, seed, known=summands), support)


def _vanishing(algebra: BasedAlgebra, summands: Sequence[Rep]) -> List[int]:
    return [v for v in range(algebra.vertex_count) if not any(m.dims[v] for m in summands)]


def _exchange_down(algebra: BasedAlgebra, rest: Sequence[Rep], moved: Rep, seed: int) -> List[Rep]:
    """
    ``U ⊕ Y`` for the exchange sequence ``X -> U' -> Y -> 0`` where ``X -> U'`` is the
    minimal left ``add U``-approximation of ``X ∉ Fac U``; ``Y`` is zero or indecomposable.
    """
    if not rest:
        return []
    u = direct_sum(rest, algebra)
    approximation = left_add_approximation(moved, u, seed=seed, classes=rest)
    fresh = [
        y
        for y in basic_summands(approximation.cokernel, seed, known=rest)
        if not any(is_isomorphic(y, r, seed) for r in rest)
    ]
    return list(rest) + fresh


def _dualise(summands: Sequence[Rep], support: Iterable[int], target: BasedAlgebra) -> List[Rep]:
    """
    The summands of the dual pair over ``target``: transposes of the non-projective
    summands and the projectives at ``support``. Projective summands become the dual
    support and are recovered from where the result vanishes.
    """
    out = [Rep.projective(target, v) for v in sorted(support)]
    out.extend(transpose(m) for m in summands if not is_projective(m))
    return out


def mutate(pair: SiltingPair, position: int, seed: int = 0) -> SiltingPair:
    """
    Replaces the summand or support vertex at ``position`` (see ``SiltingPair.positions``)
    by the unique other completion of the remaining almost complete pair.

    A summand ``X`` outside ``Fac U`` of the rest ``U`` is exchanged through the cokernel
    of its minimal left ``add U``-approximation. Otherwise the mutation goes up: the same
    exchange runs on the dual pair over the opposite algebra and the result is dualised back.

    :raises MutationFailed: when the result equals ``pair`` or does not validate
    """
    kind, value = pair.positions()[position]
    algebra = pair.algebra
    if kind == "summand":
        k = pair.gkeys.index(value)
        moved = pair.indec_summands[k]
        rest = [m for i, m in enumerate(pair.indec_summands) if i != k]
        support = set(pair.support_complement)
    else:
        moved = None
        rest = list(pair.indec_summands)
        support = set(pair.support_complement) - {value}
    if moved is not None and not in_gen(direct_sum(rest, algebra), moved):
        summands = _exchange_down(algebra, rest, moved, seed)
    else:
        opposite = algebra.opposite()
        moved_dual = transpose(moved) if moved is not None else Rep.projective(opposite, value)
        dual = _exchange_down(opposite, _dualise(rest, support, opposite), moved_dual, seed)
        summands = _dualise(dual, _vanishing(opposite, dual), algebra)
    result = SiltingPair.from_summands(algebra, summands, _vanishing(algebra, summands))
    if result.same_as(pair, seed):
        raise MutationFailed(f"{pair!r} at position {position} has a single completion")
    verdict = validate_pair(result, seed)
    if not verdict:
        logging.error("mutation of %r produced an invalid pair: %s", pair, "; ".join(verdict.diagnostics))
        raise MutationFailed("; ".join(verdict.diagnostics))
    return result


def exchanged_position(before: SiltingPair, after: SiltingPair) -> int:
    """The position of ``after`` that ``before`` does not share."""
    shared = set(before.positions())
    fresh = [i for i, p in enumerate(after.positions()) if p not in shared]
    if len(fresh) != 1:
        raise MutationFailed(f"{before!r} and {after!r} differ in {len(fresh)} positions")
    return fresh[0]

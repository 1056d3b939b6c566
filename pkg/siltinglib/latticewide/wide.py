"""
Wide subcategories attached to support τ-tilting pairs, and bounded filtration tests.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from siltinglib.approx import (
    cone_presentation,
    left_add_approximation,
    presentation_of_sum,
    x_sigma_membership,
)
from siltinglib.repmod import (
    Rep,
    TwoTermComplex,
    generated_subrep,
    hom_basis,
    hom_dim,
    in_gen,
    map_kernel_cokernel_image,
    quotient_rep,
    random_combination,
    trace_submodule,
)
from siltinglib.tautilt import SiltingPair

DEFAULT_DEPTH_CAP = 32
RAW_SAMPLES = 4


class DepthExceeded(Exception):
    """Raised when a filtration search needs more steps than allowed."""


@dataclass(frozen=True)
class WidePredicate:
    """
    The wide subcategory ``gen T ∩ T1°`` of a pair, where ``A -> T0 -> T1 -> 0`` comes
    from the minimal left ``add T``-approximation of ``A`` and ``sigma1`` presents ``T1``.
    """

    node: SiltingPair
    sigma1: TwoTermComplex
    t1: Rep
    semibrick: Tuple[Rep, ...] = ()

    def __contains__(self, module: Rep) -> bool:
        return x_sigma_membership(self.sigma1, module)

    def contains_by_gen(self, module: Rep) -> bool:
        return in_gen(self.node.module, module) and hom_dim(self.t1, module) == 0


def wide_subcategory(node: SiltingPair, semibrick: Sequence[Rep] = (), seed: int = 0) -> WidePredicate:
    algebra = node.algebra
    approximation = left_add_approximation(Rep.regular(algebra), node.module, seed=seed)
    sigma0 = presentation_of_sum(approximation.summands, algebra)
    sigma1 = cone_presentation(approximation.map, sigma0)
    logging.debug("wide subcategory of %r: T1 of dimension %d", node, approximation.cokernel.total_dim)
    return WidePredicate(node, sigma1, approximation.cokernel, tuple(semibrick))


def a_map_membership(node: SiltingPair, module: Rep, predicate: Optional[WidePredicate] = None) -> bool:
    """``module ∈ gen T`` and ``Hom(T1, module) = 0``."""
    predicate = predicate or wide_subcategory(node)
    return predicate.contains_by_gen(module)


def a_map_raw(node: SiltingPair, module: Rep, pool: Iterable[Rep], seed: int = 0) -> bool:
    """
    Spot-checks the defining property of the wide subcategory: ``module ∈ gen T`` and
    every map ``g: Y -> module`` from a pool member ``Y ∈ gen T`` has ``Ker g ∈ gen T``.
    Only Hom basis elements and a few seeded random combinations are tried.
    """
    if not in_gen(node.module, module):
        return False
    rng = random.Random(seed)
    for y in pool:
        if not in_gen(node.module, y):
            continue
        basis = hom_basis(y, module)
        maps = list(basis)
        if basis:
            maps += [random_combination(basis, rng) for _ in range(RAW_SAMPLES)]
        for g in maps:
            if not in_gen(node.module, map_kernel_cokernel_image(g).kernel):
                return False
    return True


def filtgen_membership_bounded(
    generators: Sequence[Rep], module: Rep, depth_cap: int = DEFAULT_DEPTH_CAP
) -> bool:
    """
    Whether ``module`` has a finite filtration with factors generated by ``generators``,
    found by repeatedly dividing out the largest generated submodule.

    :raises DepthExceeded: after ``depth_cap`` steps without a verdict
    """
    current = module
    for _ in range(depth_cap):
        if current.is_zero():
            return True
        spans: List[List[tuple]] = [[] for _ in current.dims]
        for g in generators:
            _, inclusion = trace_submodule(g, current)
            for v, block in enumerate(inclusion.blocks):
                spans[v].extend(block.columns())
        _, inclusion = generated_subrep(current, spans)
        if all(block.ncols == 0 for block in inclusion.blocks):
            return False
        current, _ = quotient_rep(current, [block.columns() for block in inclusion.blocks])
    if current.is_zero():
        return True
    raise DepthExceeded(f"no verdict after {depth_cap} steps")


def torsion_class_members(node: SiltingPair, pool: Iterable[Rep]) -> List[Rep]:
    return [x for x in pool if in_gen(node.module, x)]

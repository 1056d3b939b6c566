"""The ring epimorphism attached to each support τ-tilting pair, and the census over an exchange graph."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Iterable, List, Optional, Sequence, Tuple

from siltinglib.approx import left_add_approximation, x_sigma_membership
from siltinglib.epis.ring import (
    RingEpiPresentation,
    VerificationFailed,
    in_essential_image,
    presentation_from_reflection,
    verify_ring_epi,
)
from siltinglib.epis.tower import DEFAULT_TOWER_STEPS, wide_projective
from siltinglib.latticewide import NotComplete, a_map_membership, semibrick_of, wide_subcategory
from siltinglib.oracle import module_pool
from siltinglib.repmod import Rep, direct_sum, is_isomorphic
from siltinglib.tautilt import DEFAULT_MAX_DIM, ExchangeGraph, SiltingPair


def ring_epi_from_node(
    node: SiltingPair,
    max_dim: int = DEFAULT_MAX_DIM,
    depth_cap: int = DEFAULT_TOWER_STEPS,
    pool: Iterable[Rep] = (),
    seed: int = 0,
) -> RingEpiPresentation:
    """
    The ring epimorphism whose essential image is the wide subcategory of ``node``.

    The projective objects of the wide subcategory are grown from its simples, the
    regular module is approximated by them and ``B`` is the endomorphism algebra of
    the approximation.

    :raises TowerDiverged: when a wide projective outgrows the caps
    :raises VerificationFailed: when any clause of :func:`verify_ring_epi` fails
    """
    algebra = node.algebra
    semibrick = semibrick_of(node, seed)
    predicate = wide_subcategory(node, semibrick, seed)
    projectives = [wide_projective(s, semibrick, max_dim, depth_cap) for s in semibrick]
    approximation = left_add_approximation(Rep.regular(algebra), direct_sum(projectives, algebra), seed=seed)
    presentation = presentation_from_reflection(approximation.map, predicate.sigma1, semibrick)
    flags = verify_ring_epi(presentation, pool, lambda x: x_sigma_membership(predicate.sigma1, x))
    if not flags:
        logging.error("ring epimorphism of %r fails %s", node, flags.failures())
        raise VerificationFailed(f"{node!r}: {', '.join(flags.failures())}")
    return replace(presentation, flags=flags)


@dataclass(frozen=True)
class CensusRow:
    node: int
    dim_b: int
    semibrick_dims: Tuple[Tuple[int, ...], ...]
    presentation: RingEpiPresentation

    def to_dict(self) -> dict:
        return {
            "node": self.node,
            "dim_B": self.dim_b,
            "semibrick": [list(d) for d in self.semibrick_dims],
            "flags": self.presentation.flags.to_dict(),
        }


def _same_semibrick(left: Sequence[Rep], right: Sequence[Rep], seed: int) -> bool:
    if len(left) != len(right):
        return False
    unmatched = list(right)
    for x in left:
        for k, y in enumerate(unmatched):
            if is_isomorphic(x, y, seed):
                del unmatched[k]
                break
        else:
            return False
    return True


def epiclass_census(
    graph: ExchangeGraph,
    max_dim: int = DEFAULT_MAX_DIM,
    depth_cap: int = DEFAULT_TOWER_STEPS,
    seed: int = 0,
    pool: Optional[Sequence[Rep]] = None,
) -> List[CensusRow]:
    """
    One verified ring epimorphism per node. Distinct nodes must give non-isomorphic
    semibricks, so the rows are pairwise inequivalent epimorphisms. Each essential image
    is compared with its wide subcategory on ``pool``, by default :func:`module_pool`.

    :raises NotComplete: for a truncated graph
    :raises VerificationFailed: when two nodes share a semibrick
    """
    if not graph.complete:
        raise NotComplete(f"exchange graph is {graph.status}")
    if pool is None:
        pool = module_pool(graph.algebra, seed=seed)
    pool = list(pool)
    rows: List[CensusRow] = []
    for index, node in enumerate(graph.nodes):
        presentation = ring_epi_from_node(node, max_dim, depth_cap, pool, seed)
        for row in rows:
            if _same_semibrick(row.presentation.semibrick, presentation.semibrick, seed):
                raise VerificationFailed(f"nodes {row.node} and {index} have isomorphic semibricks")
        rows.append(
            CensusRow(index, presentation.dim_b, tuple(s.dims for s in presentation.semibrick), presentation)
        )
    logging.info("census found %d epiclasses", len(rows))
    return rows


def diagram_commutes(
    node: SiltingPair,
    pool: Iterable[Rep],
    presentation: Optional[RingEpiPresentation] = None,
    seed: int = 0,
) -> bool:
    """
    Whether restriction along the ring epimorphism and the wide subcategory of ``node``
    pick out the same members of ``pool``.
    """
    presentation = presentation or ring_epi_from_node(node, seed=seed)
    predicate = wide_subcategory(node, presentation.semibrick, seed)
    for x in pool:
        if in_essential_image(presentation, x) != a_map_membership(node, x, predicate):
            logging.warning("essential image and wide subcategory of %r disagree on %r", node, x)
            return False
    return True

"""Torsion classes of a representation-finite algebra, by closure over its indecomposables."""

from __future__ import annotations

import itertools
import logging
from typing import FrozenSet, List, Sequence

import networkx as nx

from siltinglib.latticewide import DEFAULT_DEPTH_CAP, filtgen_membership_bounded
from siltinglib.repmod import Rep


def torsion_closure(
    indecomposables: Sequence[Rep], generators: Sequence[int], depth_cap: int = DEFAULT_DEPTH_CAP
) -> FrozenSet[int]:
    """Indices of the indecomposables filtered by quotients of sums of the chosen ones."""
    chosen = [indecomposables[i] for i in generators]
    if not chosen:
        return frozenset()
    return frozenset(
        k for k, x in enumerate(indecomposables) if filtgen_membership_bounded(chosen, x, depth_cap)
    )


def enumerate_torsion_classes_repfinite(
    indecomposables: Sequence[Rep], depth_cap: int = DEFAULT_DEPTH_CAP
) -> List[FrozenSet[int]]:
    """
    Every torsion class, as the set of indices of its indecomposable members. The list
    must hold every indecomposable of the algebra; classes come out by size.
    """
    found = set()
    for size in range(len(indecomposables) + 1):
        for generators in itertools.combinations(range(len(indecomposables)), size):
            found.add(torsion_closure(indecomposables, generators, depth_cap))
    logging.info("%d torsion classes over %d indecomposables", len(found), len(indecomposables))
    return sorted(found, key=lambda c: (len(c), sorted(c)))


def inclusion_lattice(classes: Sequence[FrozenSet[int]]) -> nx.DiGraph:
    """Covering relations of inclusion, from larger class to smaller."""
    order = nx.DiGraph()
    order.add_nodes_from(range(len(classes)))
    for i, big in enumerate(classes):
        for j, small in enumerate(classes):
            if i != j and small < big:
                order.add_edge(i, j)
    return nx.transitive_reduction(order)

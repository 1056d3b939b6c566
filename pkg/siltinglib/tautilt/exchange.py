"""Breadth-first construction of the exchange graph of support τ-tilting pairs."""

from __future__ import annotations

import concurrent.futures
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Set, Tuple, Union

import networkx as nx

from siltinglib.exactalg import DegreeCapExceeded
from siltinglib.quiveralg import BasedAlgebra
from siltinglib.tautilt.mutation import exchanged_position, mutate
from siltinglib.tautilt.pair import Position, SiltingPair

DEFAULT_MAX_NODES = 10_000
DEFAULT_MAX_DIM = 60

COMPLETE = "complete"
TRUNCATED = "truncated"


class GkeyCollision(Exception):
    """Raised when two non-isomorphic pairs share a canonical key."""


class Edge(NamedTuple):
    source: int
    target: int
    source_position: Position
    target_position: Position


@dataclass
class ExchangeGraph:
    algebra: BasedAlgebra
    nodes: List[SiltingPair] = field(default_factory=list)
    edges: List[Edge] = field(default_factory=list)
    status: str = COMPLETE
    caps_hit: List[str] = field(default_factory=list)
    level_sizes: List[int] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def keys(self) -> List[tuple]:
        return [node.key() for node in self.nodes]

    def degree(self, index: int) -> int:
        return sum(index in (e.source, e.target) for e in self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, node in enumerate(self.nodes):
            graph.add_node(i, label=repr(node))
        for e in self.edges:
            graph.add_edge(e.source, e.target, label=f"{e.source_position}/{e.target_position}")
        return graph

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "caps_hit": list(self.caps_hit),
            "nodes": [node.to_dict() for node in self.nodes],
            "edges": [[e.source, e.target] for e in self.edges],
        }


class _Index:
    """Canonical key to node index, checking every key hit by isomorphism."""

    def __init__(self, seed: int):
        self.seed = seed
        self.by_key: Dict[tuple, int] = {}

    def find(self, graph: ExchangeGraph, pair: SiltingPair) -> Optional[int]:
        index = self.by_key.get(pair.key())
        if index is None:
            return None
        if not graph.nodes[index].same_as(pair, self.seed):
            logging.warning("g-vector collision at %s", pair.key())
            raise GkeyCollision(f"{pair!r} and {graph.nodes[index]!r} share a key")
        return index

    def add(self, graph: ExchangeGraph, pair: SiltingPair) -> int:
        graph.nodes.append(pair)
        self.by_key[pair.key()] = len(graph.nodes) - 1
        return len(graph.nodes) - 1


def _neighbours(pair: SiltingPair, skip: FrozenSet[int], seed: int) -> List[Tuple[int, Optional[SiltingPair]]]:
    """Mutations at the positions outside ``skip``; ``None`` where a polynomial ran past its degree cap."""
    out = []
    for k in range(pair.rank):
        if k in skip:
            continue
        try:
            out.append((k, mutate(pair, k, seed)))
        except DegreeCapExceeded as exc:
            logging.warning("mutation of %r at position %d abandoned: %s", pair, k, exc)
            out.append((k, None))
    return out


def exchange_graph(
    algebra: BasedAlgebra,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_dim: int = DEFAULT_MAX_DIM,
    workers: int = 1,
    seed: int = 0,
    shuffle: bool = False,
) -> ExchangeGraph:
    """
    Closes ``(A, 0)`` under mutation, level by level.

    :param max_nodes: stop once this many pairs are known
    :param max_dim: skip pairs with a summand of larger total dimension
    :param workers: mutate the pairs of a level on this many threads
    :param shuffle: visit each level in a seeded random order
    """
    graph = ExchangeGraph(algebra)
    index = _Index(seed)
    index.add(graph, SiltingPair.regular(algebra))
    frontier = [0]
    seen_edges = set()
    resolved: Dict[int, Set[int]] = {}
    rng = random.Random(seed)
    executor = concurrent.futures.ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            graph.level_sizes.append(len(frontier))
            logging.info("exchange graph level %d: %d nodes, frontier %d", len(graph.level_sizes), len(graph.nodes), len(frontier))
            if shuffle:
                rng.shuffle(frontier)
            jobs = [(graph.nodes[i], frozenset(resolved.get(i, ()))) for i in frontier]
            if executor is None:
                results = [_neighbours(p, skip, seed) for p, skip in jobs]
            else:
                results = list(executor.map(lambda job: _neighbours(job[0], job[1], seed), jobs))
            following = []
            for source, neighbours in zip(frontier, results):
                for position, pair in neighbours:
                    if pair is None or max(m.total_dim for m in pair.indec_summands or [pair.module]) > max_dim:
                        _truncate(graph, "max_dim")
                        continue
                    target = index.find(graph, pair)
                    if target is None:
                        if len(graph.nodes) >= max_nodes:
                            _truncate(graph, "max_nodes")
                            continue
                        target = index.add(graph, pair)
                        following.append(target)
                    edge_key = frozenset((source, target))
                    if edge_key in seen_edges:
                        continue
                    seen_edges.add(edge_key)
                    back = exchanged_position(graph.nodes[source], pair)
                    resolved.setdefault(source, set()).add(position)
                    resolved.setdefault(target, set()).add(back)
                    graph.edges.append(
                        Edge(source, target, graph.nodes[source].positions()[position], pair.positions()[back])
                    )
            frontier = following
    finally:
        if executor is not None:
            executor.shutdown()
    return graph


def _truncate(graph: ExchangeGraph, cap: str) -> None:
    if cap not in graph.caps_hit:
        logging.warning("exchange graph truncated by %s", cap)
        graph.caps_hit.append(cap)
    graph.status = TRUNCATED


@dataclass(frozen=True)
class Finite:
    graph: ExchangeGraph


@dataclass(frozen=True)
class Inconclusive:
    """Exploration stopped at a cap; the statistics never certify infinite type."""

    nodes_explored: int
    level_sizes: Tuple[int, ...]
    caps_hit: Tuple[str, ...]


def decide_tau_tilting_finite(
    algebra: BasedAlgebra, max_nodes: int = DEFAULT_MAX_NODES, max_dim: int = DEFAULT_MAX_DIM, workers: int = 1, seed: int = 0
) -> Union[Finite, Inconclusive]:
    graph = exchange_graph(algebra, max_nodes, max_dim, workers, seed)
    if graph.complete:
        return Finite(graph)
    return Inconclusive(len(graph.nodes), tuple(graph.level_sizes), tuple(graph.caps_hit))

"""The Hasse quiver of torsion classes and its brick labelling."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

import networkx as nx

from siltinglib.repmod import (
    Rep,
    endomorphism_radical,
    generated_subrep,
    hom_basis,
    hom_dim,
    in_gen,
    is_brick,
    quotient_rep,
)
from siltinglib.tautilt import ExchangeGraph, SiltingPair, mutate

FALLBACK_GENERATORS = 12


class NotComplete(Exception):
    """Raised when a Hasse quiver is requested for a truncated exchange graph."""


class LabelNotFound(Exception):
    """Raised when no quotient of the mutated summand verifies as the brick label of an arrow."""


def gen_leq(a: SiltingPair, b: SiltingPair) -> bool:
    """Whether ``gen(a) ⊆ gen(b)``, tested on the summands of ``a``."""
    if a.algebra is not b.algebra:
        raise ValueError("pairs over different algebras")
    return all(in_gen(b.module, m) for m in a.indec_summands)


class BrickLabel(NamedTuple):
    brick: Rep
    fallback: bool


def _images(source: Rep, module: Rep) -> List[List[tuple]]:
    vectors: List[List[tuple]] = [[] for _ in module.dims]
    for f in hom_basis(source, module):
        for v, block in enumerate(f.blocks):
            vectors[v].extend(c for c in block.columns() if any(c))
    return vectors


def _verified(candidate: Rep, upper: SiltingPair, lower: SiltingPair) -> bool:
    return (
        not candidate.is_zero()
        and is_brick(candidate)
        and in_gen(upper.module, candidate)
        and hom_dim(lower.module, candidate) == 0
    )


def brick_label(upper: SiltingPair, lower: SiltingPair) -> BrickLabel:
    """
    The brick labelling the arrow ``upper -> lower`` of the Hasse quiver.

    The candidate is ``X`` modulo the images of the other summands of ``upper`` and
    of the radical of ``End(X)``, where ``X`` is the summand mutated away. When it
    fails verification, quotients of ``X`` by the submodules generated by subsets of
    those images are tried.

    :raises LabelNotFound: when no candidate verifies
    """
    lower_positions = set(lower.positions())
    moved = [
        m for g, m in zip(upper.gkeys, upper.indec_summands) if ("summand", g) not in lower_positions
    ]
    if len(moved) != 1:
        raise LabelNotFound(f"{upper!r} -> {lower!r} does not replace a single summand")
    x = moved[0]
    rest = [m for m in upper.indec_summands if m is not x]
    generators: List[List[tuple]] = [[] for _ in x.dims]
    for m in rest:
        for v, vectors in enumerate(_images(m, x)):
            generators[v].extend(vectors)
    for phi in endomorphism_radical(x):
        for v, block in enumerate(phi.blocks):
            generators[v].extend(c for c in block.columns() if any(c))
    candidate = _quotient_by(x, generators, f"B({x.label})")
    if _verified(candidate, upper, lower):
        return BrickLabel(candidate, False)
    flat = [(v, vec) for v, vectors in enumerate(generators) for vec in vectors][:FALLBACK_GENERATORS]
    logging.warning("trace candidate for %r -> %r failed, searching %d generators", upper, lower, len(flat))
    for size in range(len(flat) + 1):
        for subset in itertools.combinations(flat, size):
            chosen: List[List[tuple]] = [[] for _ in x.dims]
            for v, vec in subset:
                chosen[v].append(vec)
            candidate = _quotient_by(x, chosen)
            if _verified(candidate, upper, lower):
                return BrickLabel(candidate, True)
    raise LabelNotFound(f"no brick label for {upper!r} -> {lower!r}")


def _quotient_by(module: Rep, generators: List[List[tuple]], label: Optional[str] = None) -> Rep:
    _, inclusion = generated_subrep(module, generators)
    quotient, _ = quotient_rep(module, [block.columns() for block in inclusion.blocks], label)
    return quotient


@dataclass
class HasseDiagram:
    """Mutation edges of a complete exchange graph, oriented from larger to smaller torsion class."""

    graph: ExchangeGraph
    digraph: nx.DiGraph

    def top(self) -> int:
        return next(i for i in self.digraph if self.digraph.in_degree(i) == 0)

    def bottom(self) -> int:
        return next(i for i in self.digraph if self.digraph.out_degree(i) == 0)

    def label(self, upper: int, lower: int) -> BrickLabel:
        data = self.digraph.edges[upper, lower]
        if "label" not in data:
            data["label"] = brick_label(self.graph.nodes[upper], self.graph.nodes[lower])
        return data["label"]

    def labels(self) -> Dict[Tuple[int, int], BrickLabel]:
        return {(u, v): self.label(u, v) for u, v in self.digraph.edges}

    def to_networkx(self) -> nx.DiGraph:
        """A copy with printable attributes, labels given by their dimension vectors."""
        out = nx.DiGraph()
        for i in self.digraph:
            out.add_node(i, label=repr(self.graph.nodes[i]))
        for u, v in self.digraph.edges:
            out.add_edge(u, v, label=str(list(self.label(u, v).brick.dims)))
        return out


def hasse(graph: ExchangeGraph) -> HasseDiagram:
    """
    :raises NotComplete: when ``graph`` was truncated
    """
    if not graph.complete:
        raise NotComplete(f"exchange graph stopped at {', '.join(graph.caps_hit)}")
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(len(graph.nodes)))
    for edge in graph.edges:
        a, b = graph.nodes[edge.source], graph.nodes[edge.target]
        if gen_leq(b, a):
            digraph.add_edge(edge.source, edge.target)
        else:
            digraph.add_edge(edge.target, edge.source)
    if not nx.is_directed_acyclic_graph(digraph):
        raise ValueError("torsion class orientation has a cycle")
    return HasseDiagram(graph, digraph)


def semibrick_at(diagram: HasseDiagram, node: int) -> List[Rep]:
    """Labels of the arrows leaving ``node``."""
    return [diagram.label(node, lower).brick for lower in sorted(diagram.digraph.successors(node))]


def node_index(diagram: HasseDiagram, pair: SiltingPair) -> Optional[int]:
    for i, node in enumerate(diagram.graph.nodes):
        if node.same_as(pair):
            return i
    return None


def semibrick_of(node: SiltingPair, seed: int = 0) -> List[Rep]:
    """Labels of the arrows leaving ``node``, found from its mutations alone."""
    out = []
    for position in range(node.rank):
        lower = mutate(node, position, seed)
        if gen_leq(lower, node):
            out.append(brick_label(node, lower).brick)
    return out

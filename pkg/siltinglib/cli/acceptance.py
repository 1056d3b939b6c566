"""
Known counts on the corpus algebras, checked end to end: exchange graphs, brick
labels, torsion classes and ring epimorphisms.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import asdict, dataclass
from typing import Any, Callable, List, Optional, Tuple

from siltinglib.approx import LiftFailure, NotPresilting, VerificationFailed
from siltinglib.cli.corpus import load_corpus
from siltinglib.cli.options import SiltingOptions
from siltinglib.epis import TowerDiverged, diagram_commutes, epiclass_census, surjection_witness
from siltinglib.exactalg import DegreeCapExceeded, FieldSpec
from siltinglib.latticewide import LabelNotFound, NotComplete, hasse
from siltinglib.oracle import (
    CapTooLarge,
    EnumerationCaps,
    brute_bricks,
    enumerate_reps_upto_iso,
    enumerate_torsion_classes_repfinite,
    module_pool,
)
from siltinglib.quiveralg import BasedAlgebra
from siltinglib.repmod import group_isomorphic
from siltinglib.tautilt import ExchangeGraph, GkeyCollision, MutationFailed, exchange_graph

CHECK_ERRORS = (
    VerificationFailed,
    NotPresilting,
    GkeyCollision,
    MutationFailed,
    TowerDiverged,
    LiftFailure,
    LabelNotFound,
    NotComplete,
    CapTooLarge,
    DegreeCapExceeded,
)


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    observed: Any
    passed: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["expected"], out["observed"] = str(self.expected), str(self.observed)
        return out


def _corpus(name: str, field: Optional[FieldSpec] = None, **params) -> BasedAlgebra:
    return load_corpus(name, params).to_algebra(field)


def _graph(
    algebra: BasedAlgebra, options: SiltingOptions, max_nodes: Optional[int] = None, max_dim: Optional[int] = None
) -> ExchangeGraph:
    return exchange_graph(
        algebra, max_nodes or options.max_nodes, max_dim or options.max_dim, options.workers, options.seed
    )


def _census_size(graph: ExchangeGraph, options: SiltingOptions) -> int:
    pool = module_pool(graph.algebra, options.dim_cap, options.seed)
    return len(epiclass_census(graph, options.max_dim, options.depth_cap, options.seed, pool))


def positive_roots_a(n: int) -> List[Tuple[int, ...]]:
    """Dimension vectors of the positive roots of A_n: intervals of ones."""
    return [tuple(int(i <= k <= j) for k in range(n)) for i in range(n) for j in range(i, n)]


def check_preprojective(n: int, options: SiltingOptions) -> List[Check]:
    weyl_order = 1
    for k in range(2, n + 2):
        weyl_order *= k
    graph = _graph(_corpus("preprojective_a", n=n), options)
    census = _census_size(graph, options)
    return [
        Check(f"preprojective A{n} pairs", weyl_order, len(graph.nodes), graph.complete and len(graph.nodes) == weyl_order),
        Check(f"preprojective A{n} epiclasses", weyl_order, census, census == weyl_order),
    ]


def check_preprojective_bricks(n: int, dim_cap: int, options: SiltingOptions) -> List[Check]:
    algebra = _corpus("preprojective_a", FieldSpec.prime(2), n=n)
    bricks = brute_bricks(algebra, EnumerationCaps(prime=2, max_total_dim=dim_cap), options.seed)
    roots = set(positive_roots_a(n))
    outside = [b.dims for b in bricks if b.dims not in roots]
    out = [Check(f"preprojective A{n} bricks are roots", [], outside, not outside)]
    if n == 2 and dim_cap == 2:
        out.append(Check("preprojective A2 bricks up to dimension 2", 4, len(bricks), len(bricks) == 4))
    return out


def check_wild(n: int, options: SiltingOptions) -> List[Check]:
    graph = _graph(_corpus("wild_R", n=n), options)
    out = [Check(f"wild_R n={n} finite", "Finite", graph.status, graph.complete)]
    if not graph.complete:
        return out
    diagram = hasse(graph)
    bricks = group_isomorphic([label.brick for label in diagram.labels().values()], options.seed)
    # each brick labels the arrows below exactly one join-irreducible torsion class
    irreducible = sum(diagram.digraph.out_degree(i) == 1 for i in diagram.digraph)
    out.append(Check(f"wild_R n={n} label bricks", irreducible, len(bricks), len(bricks) == irreducible))
    census = _census_size(graph, options)
    out.append(Check(f"wild_R n={n} epiclasses", len(graph.nodes), census, census == len(graph.nodes)))
    return out


def check_two_loop(options: SiltingOptions) -> List[Check]:
    graph = _graph(_corpus("two_loop_gdp"), options)
    out = [Check("two_loop_gdp finite", "Finite", graph.status, graph.complete)]
    if graph.complete:
        census = _census_size(graph, options)
        out.append(Check("two_loop_gdp epis verified", len(graph.nodes), census, census == len(graph.nodes)))
    return out


def kronecker_dims(caps: Tuple[int, int], max_dim: int) -> Tuple[int, int]:
    """
    Summand dimension caps for the two Kronecker runs. Summand dimensions grow linearly
    along both rays, so the node cap alone would reach modules of dimension near the cap;
    the smaller run stops at half the configured dimension cap, the larger at all of it.
    """
    return min(caps[0] // 2, max_dim // 2), min(caps[1] // 2, max_dim)


def check_kronecker(caps: Tuple[int, int], options: SiltingOptions) -> List[Check]:
    algebra = _corpus("kronecker")
    small, large = (
        _graph(algebra, options, cap, dim) for cap, dim in zip(caps, kronecker_dims(caps, options.max_dim))
    )
    inconclusive = not small.complete and not large.complete
    return [
        Check(f"kronecker inconclusive at {caps}", "Inconclusive", (small.status, large.status), inconclusive),
        Check(
            "kronecker grows with the cap",
            f"more than {len(small.nodes)}",
            len(large.nodes),
            len(large.nodes) > len(small.nodes),
        ),
    ]


def check_dual_numbers(options: SiltingOptions) -> List[Check]:
    algebra = _corpus("kx2")
    graph = _graph(algebra, options)
    census = _census_size(graph, options)
    witness = surjection_witness(algebra)
    return [
        Check("k[x]/(x^2) pairs", 2, len(graph.nodes), len(graph.nodes) == 2),
        Check("k[x]/(x^2) epiclasses", 2, census, census == 2),
        Check("k[x]/(x^2) surjection tor1_zero", False, witness.flags.tor1_zero, witness.flags.tor1_zero is False),
    ]


def check_linear_a2(options: SiltingOptions) -> List[Check]:
    algebra = _corpus("linear_a2")
    graph = _graph(algebra, options)
    census = _census_size(graph, options)
    indecomposables = enumerate_reps_upto_iso(
        _corpus("linear_a2", FieldSpec.prime(2)), EnumerationCaps(prime=2, max_total_dim=2), options.seed
    )
    torsion = len(enumerate_torsion_classes_repfinite(indecomposables))
    pool = module_pool(algebra, options.dim_cap, options.seed)
    commuting = sum(diagram_commutes(node, pool, seed=options.seed) for node in graph.nodes)
    return [
        Check("linear A2 pairs and edges", (5, 5), (len(graph.nodes), len(graph.edges)), (len(graph.nodes), len(graph.edges)) == (5, 5)),
        Check("linear A2 epiclasses", 5, census, census == 5),
        Check("linear A2 torsion classes", 5, torsion, torsion == 5),
        Check("linear A2 diagrams commute", len(graph.nodes), commuting, commuting == len(graph.nodes)),
    ]


def _guarded(name: str, run: Callable[[], List[Check]]) -> List[Check]:
    try:
        return run()
    except CHECK_ERRORS as e:
        logging.error("%s failed: %s", name, e)
        return [Check(name, "no error", f"{type(e).__name__}: {e}", False)]


def run_acceptance(options: SiltingOptions, quick: bool = False) -> List[Check]:
    """
    Every check on the corpus. ``quick`` drops preprojective A3, the wild example and
    the larger Kronecker cap.
    """
    suites: List[Tuple[str, Callable[[], List[Check]]]] = [
        ("linear A2", lambda: check_linear_a2(options)),
        ("dual numbers", lambda: check_dual_numbers(options)),
        ("preprojective A2", lambda: check_preprojective(2, options)),
        ("preprojective A2 bricks", lambda: check_preprojective_bricks(2, 2, options)),
        ("two_loop_gdp", lambda: check_two_loop(options)),
        ("kronecker", lambda: check_kronecker((20, 40) if quick else (100, 1000), options)),
    ]
    if not quick:
        suites += [
            ("preprojective A3", lambda: check_preprojective(3, options)),
            ("preprojective A3 bricks", lambda: check_preprojective_bricks(3, 4, options)),
            ("wild_R", lambda: check_wild(9, options)),
        ]
    checks = list(itertools.chain.from_iterable(_guarded(name, run) for name, run in suites))
    logging.info("%d of %d checks passed", sum(c.passed for c in checks), len(checks))
    return checks

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from siltinglib.approx import CompletedPair, d_sigma_membership, presentation_of_sum
from siltinglib.quiveralg import BasedAlgebra
from siltinglib.repmod import (
    Rep,
    TwoTermComplex,
    direct_sum,
    hom_dim,
    in_gen,
    is_indecomposable,
    is_isomorphic,
    min_proj_presentation,
    standard_modules,
    tau,
)

GKey = Tuple[int, ...]
Position = Tuple[str, object]


def is_tau_rigid(module: Rep) -> bool:
    """``Hom(M, τM) = 0``."""
    return hom_dim(module, tau(module)) == 0


@dataclass(frozen=True, eq=False)
class SiltingPair:
    """
    A basic support τ-tilting pair ``(M, P)``. The indecomposable summands of ``M`` are
    kept sorted by their g-vectors; ``support_complement`` lists the vertices of ``P``.
    """

    algebra: BasedAlgebra
    indec_summands: Tuple[Rep, ...]
    gkeys: Tuple[GKey, ...]
    support_complement: FrozenSet[int]
    module: Rep = field(repr=False)

    @classmethod
    def from_summands(
        cls, algebra: BasedAlgebra, summands: Iterable[Rep], support_complement: Iterable[int] = ()
    ) -> SiltingPair:
        keyed = sorted(
            ((min_proj_presentation(m).gkey(), m) for m in summands), key=lambda pair: pair[0]
        )
        ordered = tuple(m for _, m in keyed)
        return cls(
            algebra,
            ordered,
            tuple(g for g, _ in keyed),
            frozenset(support_complement),
            direct_sum(ordered, algebra),
        )

    @classmethod
    def from_completed(cls, completed: CompletedPair) -> SiltingPair:
        return cls.from_summands(completed.algebra, completed.summands, completed.support)

    @classmethod
    def regular(cls, algebra: BasedAlgebra) -> SiltingPair:
        """``(A, 0)``."""
        return cls.from_summands(algebra, standard_modules(algebra).projectives)

    def __repr__(self) -> str:
        names = self.algebra.quiver.vertices
        support = ",".join(names[v] for v in sorted(self.support_complement))
        return f"SiltingPair(gkeys={list(self.gkeys)}, support={{{support}}})"

    @property
    def rank(self) -> int:
        return len(self.indec_summands) + len(self.support_complement)

    def key(self) -> Tuple[Tuple[GKey, ...], Tuple[int, ...]]:
        """Sorted g-vectors plus the sorted support complement."""
        return self.gkeys, tuple(sorted(self.support_complement))

    def positions(self) -> List[Position]:
        """Summands by g-vector, then the support-complement vertices."""
        return [("summand", g) for g in self.gkeys] + [
            ("support", v) for v in sorted(self.support_complement)
        ]

    def same_as(self, other: SiltingPair, seed: int = 0) -> bool:
        if self.key() != other.key():
            return False
        return is_isomorphic(self.module, other.module, seed)

    def to_dict(self) -> dict:
        names = self.algebra.quiver.vertices
        return {
            "summands": [m.to_dict() for m in self.indec_summands],
            "gkeys": [list(g) for g in self.gkeys],
            "support_complement": [names[v] for v in sorted(self.support_complement)],
        }


@dataclass(frozen=True)
class Validation:
    valid: bool
    diagnostics: Tuple[str, ...]

    def __bool__(self) -> bool:
        return self.valid


def validate_pair(pair: SiltingPair, seed: int = 0) -> Validation:
    """Checks every defining condition of a basic support τ-tilting pair and names the failures."""
    problems = []
    names = pair.algebra.quiver.vertices
    n = pair.algebra.vertex_count
    if pair.rank != n:
        problems.append(f"summand count {pair.rank} ≠ {n}")
    for v in sorted(pair.support_complement):
        if pair.module.dims[v]:
            problems.append(f"Hom(P{names[v]}, M) ≠ 0")
    for i, m in enumerate(pair.indec_summands):
        if not is_indecomposable(m, seed):
            problems.append(f"summand {i} is decomposable")
        for j in range(i):
            if is_isomorphic(pair.indec_summands[j], m, seed):
                problems.append(f"summands {j} and {i} are isomorphic")
    if not is_tau_rigid(pair.module):
        problems.append("Hom(M, τM) ≠ 0")
    return Validation(not problems, tuple(problems))


def silting_to_presentation(pair: SiltingPair) -> TwoTermComplex:
    """The minimal presentation of the module plus ``(P_v -> 0)`` for the support complement."""
    presentation = presentation_of_sum(pair.indec_summands, pair.algebra)
    shifted = TwoTermComplex.stalk(pair.algebra, p1=sorted(pair.support_complement))
    return presentation.direct_sum(shifted)


def pool_disagreements(pair: SiltingPair, pool: Sequence[Rep]) -> List[Rep]:
    """Modules of ``pool`` on which ``gen(M)`` and ``D_σ`` membership disagree."""
    sigma = silting_to_presentation(pair)
    return [x for x in pool if in_gen(pair.module, x) != d_sigma_membership(sigma, x)]

"""Krull-Schmidt decomposition, isomorphism and brick tests through endomorphism algebras."""

from __future__ import annotations

import itertools
import logging
import random
from typing import List, Optional, Sequence, Tuple

from siltinglib.exactalg import (
    EchelonBasis,
    Matrix,
    kernel_basis,
    minimal_polynomial_and_factor,
    primary_decomposition,
    single_eigenvalue,
)
from siltinglib.repmod.hom import end_basis, hom_basis
from siltinglib.repmod.rep import Rep, RepMap, map_kernel_cokernel_image, subrep

SPLIT_ATTEMPTS = 20
ISOMORPHISM_ATTEMPTS = 8
EXHAUSTIVE_LIMIT = 10**6


class NotSplitError(Exception):
    """Raised when an endomorphism algebra has a residue division algebra larger than the field; try another field."""


class IsomorphismUndecided(Exception):
    """Raised when neither a random nor an exhaustive search can settle an isomorphism question."""


def random_combination(basis: Sequence[RepMap], rng: random.Random) -> RepMap:
    field = basis[0].source.field
    result = basis[0].scale(field.random_element(rng))
    for f in basis[1:]:
        result = result + f.scale(field.random_element(rng))
    return result


def _independent(maps: Sequence[RepMap]) -> List[RepMap]:
    if not maps:
        return []
    field = maps[0].source.field
    size = maps[0].source.total_dim * maps[0].target.total_dim
    span = EchelonBasis(field, size)
    return [f for f in maps if span.add(f.total().flatten())]


def local_radical(module: Rep, basis: Optional[Sequence[RepMap]] = None) -> Optional[List[RepMap]]:
    """
    When ``End(module)`` is local with residue field the ground field, a basis of its
    radical, namely the maps ``phi - λ(phi) id``; otherwise ``None``.
    """
    if basis is None:
        basis = end_basis(module)
    if not basis:
        return None
    identity = RepMap.identity(module)
    shifted = []
    for phi in basis:
        eigenvalue = single_eigenvalue(phi.total(), module.total_dim)
        if eigenvalue is None:
            return None
        shifted.append(phi - identity.scale(eigenvalue))
    radical = _independent(shifted)
    if len(radical) != len(basis) - 1:
        return None
    field = module.field
    span = EchelonBasis(field, module.total_dim**2)
    for n in radical:
        span.add(n.total().flatten())
    for phi in basis:
        for n in radical:
            if not span.contains(phi.compose(n).total().flatten()):
                return None
            if not span.contains(n.compose(phi).total().flatten()):
                return None
    power = radical
    while power:
        following = _independent([p.compose(n) for p in power for n in radical])
        if len(following) == len(power):
            return None
        power = following
    return radical


def endomorphism_radical(module: Rep) -> List[RepMap]:
    """
    A basis of ``rad End(module)``: by the trace form when the characteristic is zero
    or exceeds the dimension, otherwise through the local test.
    """
    basis = end_basis(module)
    p = module.field.characteristic
    if p == 0 or p > module.total_dim:
        totals = [f.total() for f in basis]
        gram = Matrix(
            module.field,
            len(basis),
            len(basis),
            tuple(tuple((a @ b).trace() for b in totals) for a in totals),
        )
        out = []
        for vector in kernel_basis(gram):
            combination = RepMap.zero(module, module)
            for c, f in zip(vector, basis):
                if c:
                    combination = combination + f.scale(c)
            out.append(combination)
        return out
    radical = local_radical(module, basis)
    if radical is None:
        raise NotSplitError(f"cannot compute the radical of End({module.label}) over {module.field}")
    return radical


def _graded_bases(module: Rep, vectors: Sequence[tuple]) -> List[List[tuple]]:
    offsets = module.offsets
    bases = []
    for v, d in enumerate(module.dims):
        span = EchelonBasis(module.field, d)
        pieces = [tuple(vec[offsets[v] : offsets[v] + d]) for vec in vectors]
        bases.append([piece for piece in pieces if any(piece) and span.add(piece)])
    return bases


def _retraction(summand: Rep, module: Rep) -> Optional[RepMap]:
    """Some ``g: module -> summand`` with ``g f`` invertible for a basis map ``f: summand -> module``."""
    if any(s > d for s, d in zip(summand.dims, module.dims)):
        return None
    sections = hom_basis(summand, module)
    if not sections:
        return None
    for g in hom_basis(module, summand):
        for f in sections:
            if g.compose(f).is_isomorphism():
                return g
    return None


def split_off(module: Rep, summand: Rep) -> Tuple[int, Rep]:
    """
    The number of copies of the indecomposable ``summand`` in ``module`` and a
    complement of them. Each copy is split as ``module = im f ⊕ ker g`` for a pair
    ``f: summand -> module``, ``g: module -> summand`` with ``g f`` invertible; with
    ``End(summand)`` local such a pair exists among basis maps.
    """
    copies = 0
    while not module.is_zero():
        g = _retraction(summand, module)
        if g is None:
            break
        module = map_kernel_cokernel_image(g).kernel.relabel(module.label)
        copies += 1
    return copies, module


def decompose(
    module: Rep, seed: int = 0, rng: Optional[random.Random] = None, known: Sequence[Rep] = ()
) -> List[Rep]:
    """
    Indecomposable summands of ``module``, split off by the generalized eigenspaces of
    endomorphisms whose minimal polynomial has several irreducible factors.

    Copies of the indecomposables in ``known`` are split off first, so the eigenvalue
    work only sees what remains.

    :raises NotSplitError: when an indecomposable summand could not be certified local
    """
    peeled: List[Rep] = []
    for summand in known:
        copies, module = split_off(module, summand)
        peeled.extend([summand] * copies)
    if peeled:
        return peeled + decompose(module, seed, rng)
    if module.is_zero():
        return []
    rng = rng or random.Random(seed)
    basis = end_basis(module)
    if len(basis) == 1 or local_radical(module, basis) is not None:
        return [module]
    candidates = itertools.chain(basis, (random_combination(basis, rng) for _ in range(SPLIT_ATTEMPTS)))
    for phi in candidates:
        components = primary_decomposition(phi.total(), module.total_dim)
        if len(components) < 2:
            continue
        out = []
        for _, vectors in components:
            summand, _ = subrep(module, _graded_bases(module, vectors), module.label)
            out.extend(decompose(summand, rng=rng))
        return out
    raise NotSplitError(
        f"End({module.label}) has dimension {len(basis)} but no splitting element was found over {module.field}"
    )


def _indecomposables_isomorphic(m: Rep, n: Rep) -> bool:
    """For indecomposables: some composite of basis maps ``M -> N -> M`` is invertible."""
    if m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    forward, backward = hom_basis(m, n), hom_basis(n, m)
    for f in forward:
        if f.is_isomorphism():
            return True
    for f in forward:
        for g in backward:
            if g.compose(f).is_isomorphism():
                return True
    return False


def _exhaustive_isomorphism(maps: Sequence[RepMap]) -> bool:
    field = maps[0].source.field
    if field.kind != "prime" or field.p ** len(maps) > EXHAUSTIVE_LIMIT:
        raise IsomorphismUndecided(f"Hom space of dimension {len(maps)} over {field} is too large to search")
    for coefficients in itertools.product(field.elements(), repeat=len(maps)):
        if not any(coefficients):
            continue
        combination = maps[0].scale(coefficients[0])
        for c, f in zip(coefficients[1:], maps[1:]):
            combination = combination + f.scale(c)
        if combination.is_isomorphism():
            return True
    return False


def is_isomorphic(m: Rep, n: Rep, seed: int = 0) -> bool:
    """
    Whether an invertible module map ``m -> n`` exists. Random combinations of a Hom
    basis are tried first; a negative answer is settled by matching indecomposable
    summands, or by exhaustive search over small prime fields.
    """
    if m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    maps = hom_basis(m, n)
    if not maps:
        return False
    rng = random.Random(seed)
    for f in itertools.chain(maps, (random_combination(maps, rng) for _ in range(ISOMORPHISM_ATTEMPTS))):
        if f.is_isomorphism():
            return True
    if len(maps) != len(end_basis(m)) or len(maps) != len(end_basis(n)):
        return False
    try:
        left, right = decompose(m, seed), decompose(n, seed)
    except NotSplitError:
        return _exhaustive_isomorphism(maps)
    if len(left) != len(right):
        return False
    unmatched = list(right)
    for x in left:
        for k, y in enumerate(unmatched):
            if _indecomposables_isomorphic(x, y):
                del unmatched[k]
                break
        else:
            return False
    return True


def group_isomorphic(modules: Sequence[Rep], seed: int = 0) -> List[Tuple[Rep, int]]:
    """Isomorphism classes with multiplicities, in order of first appearance."""
    out: List[List] = []
    for m in modules:
        for entry in out:
            if is_isomorphic(entry[0], m, seed):
                entry[1] += 1
                break
        else:
            out.append([m, 1])
    return [(m, k) for m, k in out]


def is_indecomposable(module: Rep, seed: int = 0) -> bool:
    return len(decompose(module, seed)) == 1


def is_brick(module: Rep, seed: int = 0) -> bool:
    """
    Whether ``End(module)`` is a division ring. A one dimensional endomorphism algebra
    is the split case; larger ones are accepted only when no sampled endomorphism is a
    zero divisor, and that is logged.
    """
    if module.is_zero():
        return False
    basis = end_basis(module)
    if len(basis) == 1:
        return True
    if local_radical(module, basis) is not None:
        return False
    rng = random.Random(seed)
    for phi in itertools.chain(basis, (random_combination(basis, rng) for _ in range(SPLIT_ATTEMPTS))):
        factors = minimal_polynomial_and_factor(phi.total(), module.total_dim)
        if len(factors) != 1 or factors[0][1] != 1:
            return False
    logging.warning(
        "End(%s) has dimension %d and looks like a division algebra over %s", module.label, len(basis), module.field
    )
    return True


def trace_submodule(generator: Rep, module: Rep) -> Tuple[Rep, RepMap]:
    """The sum of the images of all maps ``generator -> module``, with its inclusion."""
    spans = [EchelonBasis(module.field, d) for d in module.dims]
    bases: List[List[tuple]] = [[] for _ in module.dims]
    for f in hom_basis(generator, module):
        for v, block in enumerate(f.blocks):
            for column in block.columns():
                if spans[v].add(column):
                    bases[v].append(column)
    return subrep(module, bases, f"tr({generator.label},{module.label})")


def in_gen(generator: Rep, module: Rep) -> bool:
    """Whether ``module`` is a quotient of a finite sum of copies of ``generator``."""
    sub, _ = trace_submodule(generator, module)
    return sub.dims == module.dims

# services/semigroup_service.py

"""
Semigroup Service
Validates characteristic exponents and derives the semigroup presentation:
generators, characteristic integers, the dual lattice N, and enumeration of
semigroup elements through their unique expansion
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from math import lcm
from typing import List, Optional, Sequence, Tuple

from models.lattice_models import LatticeBasis, RationalVector
from models.qo_models import CharacteristicSequence, SemigroupPresentation
from services.lattice_service import (
    contains,
    dual_sublattice,
    lattice_index,
    overlattice,
    standard_lattice,
)
from utils.exceptions import (
    BadDimension,
    DimensionMismatch,
    LexOrderViolated,
    NegativeExponent,
    NoInteriorWeight,
    NotStrictlyIncreasing,
    RedundantExponent,
)

logger = logging.getLogger(__name__)

CanonicalForm = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _check_structure(cs: CharacteristicSequence):
    if cs.d < 2:
        raise BadDimension(f"Ambient dimension {cs.d} < 2", datum=cs.d)
    if cs.g == 0:
        raise BadDimension("No characteristic exponents (smooth germ)", datum=[])
    for lam in cs.lambdas:
        if lam.dim != cs.d:
            raise BadDimension(f"Exponent of length {lam.dim} in dimension {cs.d}", datum=lam)
    for lam in cs.lambdas:
        if not lam.is_nonnegative():
            raise NegativeExponent("Characteristic exponents must be nonnegative", datum=lam)
    for j in range(cs.g - 1):
        if not cs.lambdas[j].lt(cs.lambdas[j + 1]):
            raise NotStrictlyIncreasing(
                f"lambda_{j + 1} < lambda_{j + 2} fails",
                datum=[cs.lambdas[j], cs.lambdas[j + 1]]
            )
    for i in range(cs.d - 1):
        if cs.column(i) < cs.column(i + 1):
            raise LexOrderViolated(
                f"Coordinate {i + 1} is lexicographically smaller than coordinate {i + 2}",
                datum=[list(cs.column(i)), list(cs.column(i + 1))]
            )


def lattice_chain(cs: CharacteristicSequence) -> Tuple[LatticeBasis, ...]:
    """M_0 = Z^d and M_j = M_{j-1} + Z lambda_j"""
    chain = [standard_lattice(cs.d)]
    for j in range(1, cs.g + 1):
        chain.append(overlattice(cs.lambdas[:j], cs.d))
    return tuple(chain)


def is_normalized(cs: CharacteristicSequence) -> bool:
    """Lex order is checked by validate; here only the lambda_1^1 > 1 condition"""
    first = cs.lambdas[0]
    single_support = all(x == 0 for x in first.coords[1:])
    return not (single_support and first[0] <= 1)


def validate(cs: CharacteristicSequence) -> SemigroupPresentation:
    """
    Validate a characteristic sequence and derive its semigroup presentation

    Args:
        cs: Characteristic exponents

    Returns:
        SemigroupPresentation with generators, indices, N and m

    Raises:
        BadDimension, NegativeExponent, NotStrictlyIncreasing,
        LexOrderViolated, RedundantExponent
    """
    _check_structure(cs)

    chain = lattice_chain(cs)
    ns = []
    for j in range(1, cs.g + 1):
        n = lattice_index(chain[j - 1], chain[j])
        if n == 1:
            logger.warning(f"lambda_{j} lies in M_{j - 1}")
            raise RedundantExponent(f"lambda_{j} lies in M_{j - 1}", datum=cs.lambdas[j - 1])
        ns.append(n)

    gammas = [cs.lambdas[0]]
    for j in range(cs.g - 1):
        gammas.append(gammas[j].scale(ns[j]) + cs.lambdas[j + 1] - cs.lambdas[j])

    last = cs.lambdas[-1]
    c = sum(1 for x in last.coords if x != 0)
    m = tuple(lcm(1, *(gamma[i].denominator for gamma in gammas)) for i in range(cs.d))
    lattice_n = dual_sublattice(gammas, cs.d)

    presentation = SemigroupPresentation(
        char_seq=cs,
        gammas=tuple(gammas),
        ns=tuple(ns),
        c=c,
        lattice_N=lattice_n,
        m=m,
        normalized=is_normalized(cs),
        chain=chain
    )
    logger.info(f"Validated presentation: d={cs.d}, g={cs.g}, n={tuple(ns)}, c={c}, m={m}")
    return presentation


def lambdas_from_gammas(gammas: Sequence[RationalVector], ns: Sequence[int]) -> Tuple[RationalVector, ...]:
    """lambda_1 = gamma_1, lambda_{j+1} = gamma_{j+1} - n_j gamma_j + lambda_j"""
    lambdas = [gammas[0]]
    for j in range(len(gammas) - 1):
        lambdas.append(gammas[j + 1] - gammas[j].scale(ns[j]) + lambdas[j])
    return tuple(lambdas)


def pad_sequence(cs: CharacteristicSequence, k: int) -> CharacteristicSequence:
    """Append k zero coordinates to every exponent"""
    return CharacteristicSequence(cs.d + k, tuple(lam.padded(k) for lam in cs.lambdas))


def canonical_form(gamma: RationalVector, sp: SemigroupPresentation) -> Optional[CanonicalForm]:
    """
    Unique expansion gamma = alpha + sum l_i gamma_i with 0 <= l_i < n_i

    Returns:
        (alpha, l) if gamma lies in the semigroup, None otherwise
    """
    if gamma.dim != sp.d:
        raise DimensionMismatch(f"Vector of length {gamma.dim} in dimension {sp.d}", datum=gamma)

    chain = sp.chain or lattice_chain(sp.char_seq)
    residual = gamma
    ls = [0] * sp.g
    for i in range(sp.g - 1, -1, -1):
        found = None
        for l in range(sp.ns[i]):
            candidate = residual - sp.gammas[i].scale(l)
            if contains(candidate, chain[i]):
                found = (l, candidate)
                break
        if found is None:
            return None
        ls[i], residual = found

    if not residual.is_integral() or not residual.is_nonnegative():
        return None
    return residual.to_ints(), tuple(ls)


def _check_weights(d: int, weights: Sequence[Sequence[int]], bounds: Sequence[int]):
    if len(weights) != len(bounds):
        raise DimensionMismatch(f"{len(weights)} weights but {len(bounds)} bounds", datum=list(bounds))
    for w in weights:
        if len(w) != d:
            raise DimensionMismatch(f"Weight {tuple(w)} is not of length {d}", datum=list(w))
        if any(x < 0 for x in w):
            raise NoInteriorWeight("Weights must be nonnegative", datum=list(w))
    if not any(all(x > 0 for x in w) for w in weights):
        raise NoInteriorWeight("No weight is strictly positive in every coordinate", datum=[list(w) for w in weights])


def _alphas_within(weights: Sequence[Sequence[int]], budget: Sequence[Fraction], d: int) -> List[Tuple[int, ...]]:
    """Nonnegative integer vectors alpha with <w_k, alpha> <= budget_k"""
    found = []
    alpha = [0] * d

    def extend(k: int, remaining: List[Fraction]):
        if k == d:
            found.append(tuple(alpha))
            return
        value = 0
        while all(r >= 0 for r in remaining):
            alpha[k] = value
            extend(k + 1, remaining)
            value += 1
            remaining = [r - w[k] for r, w in zip(remaining, weights)]
        alpha[k] = 0

    extend(0, list(budget))
    return found


def _enumerate_chunk(sp: SemigroupPresentation, weights, bounds, l_tuples) -> List[Tuple[Tuple[int, ...], RationalVector]]:
    elements = []
    for ls in l_tuples:
        base = RationalVector.zero(sp.d)
        for l, gamma in zip(ls, sp.gammas):
            if l:
                base = base + gamma.scale(l)
        budget = [Fraction(b) - base.pairing(w) for w, b in zip(weights, bounds)]
        if any(r < 0 for r in budget):
            continue
        for alpha in _alphas_within(weights, budget, sp.d):
            element = base + RationalVector(alpha)
            elements.append((alpha + tuple(ls), element))
    return elements


def enumerate_semigroup(
        sp: SemigroupPresentation,
        weights: Sequence[Sequence[int]],
        bounds: Sequence[int],
        threads: int = 1
) -> List[RationalVector]:
    """
    All semigroup elements with <w_k, gamma> <= b_k, in lex order of (alpha, l)

    Args:
        sp: Semigroup presentation
        weights: Nonnegative integer weights, one of them interior
        bounds: Upper bounds per weight
        threads: Worker cap; the l-index space is split among workers

    Returns:
        Elements, each exactly once
    """
    _check_weights(sp.d, weights, bounds)

    l_tuples = list(product(*(range(n) for n in sp.ns)))
    workers = max(1, min(threads, len(l_tuples)))
    if workers == 1:
        elements = _enumerate_chunk(sp, weights, bounds, l_tuples)
    else:
        chunks = [l_tuples[k::workers] for k in range(workers)]
        elements = []
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(lambda chunk: _enumerate_chunk(sp, weights, bounds, chunk), chunks):
                elements.extend(part)

    elements.sort(key=lambda item: item[0])
    logger.debug(f"Enumerated {len(elements)} semigroup elements within bounds {tuple(bounds)}")
    return [element for _, element in elements]

# services/poincare_service.py

"""
Poincare Series Service
Forward closed form from essential valuations, short forms, box-truncated
expansion, and the enumeration oracles the closed forms are checked against
"""

import logging
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import EngineSettings
from models.lattice_models import RationalVector
from models.qo_models import EssentialDivisors, SemigroupPresentation
from models.series_models import CyclotomicRational, Exponent, TruncatedSeries
from services.semigroup_service import enumerate_semigroup
from utils.exceptions import (
    BoxTooLarge,
    DimensionMismatch,
    NoInteriorWeight,
    NonIntegralPairing,
)

logger = logging.getLogger(__name__)


def _pairings(gamma: RationalVector, weights: Sequence[Sequence[int]]) -> Exponent:
    values = []
    for w in weights:
        value = gamma.pairing(w)
        if value.denominator != 1:
            raise NonIntegralPairing(f"<{tuple(w)}, gamma> = {value} is not an integer", datum=gamma)
        values.append(value.numerator)
    return tuple(values)


def monomial_map(gamma: RationalVector, ed: EssentialDivisors) -> Exponent:
    """(<w_1, gamma>, ..., <w_p, gamma>)"""
    return _pairings(gamma, ed.ws)


def poincare_weights(
        sp: SemigroupPresentation,
        weights: Sequence[Sequence[int]],
        groups: Optional[Tuple[int, int, int]] = None,
        two_group_mode: bool = False
) -> CyclotomicRational:
    """
    Closed form of the Poincare series for an arbitrary list of weights in N

    numerator = { <w, n_i gamma_i> }, denominator = { <w, e_j> } + { <w, gamma_i> }
    """
    numerator = [_pairings(gamma.scale(n), weights) for gamma, n in zip(sp.gammas, sp.ns)]
    denominator = [_pairings(RationalVector.unit(j, sp.d), weights) for j in range(sp.d)]
    denominator += [_pairings(gamma, weights) for gamma in sp.gammas]
    return CyclotomicRational(
        vars=len(weights),
        groups=groups if groups is not None else (0, 0, len(weights)),
        numerator=tuple(numerator),
        denominator=tuple(denominator),
        two_group_mode=two_group_mode
    )


def poincare_forward(sp: SemigroupPresentation, ed: EssentialDivisors) -> CyclotomicRational:
    """Poincare series of the presentation with respect to its essential valuations, not cancelled"""
    cr = poincare_weights(sp, ed.ws, groups=ed.groups, two_group_mode=ed.two_group_mode)
    logger.info(f"Forward series: {len(cr.numerator)} numerator / {len(cr.denominator)} denominator factors")
    return cr


def short_form(cr: CyclotomicRational) -> CyclotomicRational:
    """Cancel equal factors between numerator and denominator"""
    numerator = Counter(cr.numerator)
    denominator = Counter(cr.denominator)
    common = numerator & denominator
    if not common:
        return cr
    logger.debug(f"Cancelling {sum(common.values())} common factors")
    return CyclotomicRational(
        vars=cr.vars,
        groups=cr.groups,
        numerator=tuple((numerator - common).elements()),
        denominator=tuple((denominator - common).elements()),
        two_group_mode=cr.two_group_mode
    )


def _fits(step: Exponent, bound: Exponent) -> bool:
    return all(s <= b for s, b in zip(step, bound))


def _shifted(series: Dict[Exponent, int], step: Exponent, bound: Exponent) -> List[Tuple[Exponent, int]]:
    """Terms of t^step * series that stay inside the box"""
    if not series:
        return []
    keys = np.array(list(series), dtype=np.int64).reshape(len(series), len(bound))
    moved = keys + np.asarray(step, dtype=np.int64)
    inside = np.flatnonzero(np.all(moved <= np.asarray(bound, dtype=np.int64), axis=1))
    coeffs = list(series.values())
    return [(tuple(int(x) for x in moved[i]), coeffs[i]) for i in inside]


def _accumulate(series: Dict[Exponent, int], terms: List[Tuple[Exponent, int]], sign: int, max_points: int):
    for key, c in terms:
        value = series.get(key, 0) + sign * c
        if value:
            series[key] = value
        else:
            series.pop(key, None)
    if len(series) > max_points:
        raise BoxTooLarge(f"Expansion holds more than {max_points} monomials", datum=len(series))


def expand(cr: CyclotomicRational, bound: Sequence[int], max_points: int = EngineSettings.MAX_BOX_POINTS) -> TruncatedSeries:
    """
    Multiply out prod(1 - t^beta) * prod sum_k t^(k alpha) inside the box

    Only reachable monomials are stored, so the cost follows the number of
    nonzero coefficients rather than the volume of the box.

    Args:
        cr: Cyclotomic form
        bound: Per-coordinate truncation
        max_points: Refuse expansions holding more monomials

    Returns:
        TruncatedSeries with exact integer coefficients
    """
    bound = tuple(int(b) for b in bound)
    if len(bound) != cr.vars:
        raise DimensionMismatch(f"Bound has {len(bound)} entries for {cr.vars} variables", datum=list(bound))

    series: Dict[Exponent, int] = {(0,) * cr.vars: 1}

    for beta in cr.numerator:
        _accumulate(series, _shifted(series, beta, bound), -1, max_points)

    # 1/(1 - t^a) = prod_j (1 + t^(2^j a)) inside a finite box
    for alpha in cr.denominator:
        step = alpha
        while _fits(step, bound):
            _accumulate(series, _shifted(series, step, bound), 1, max_points)
            step = tuple(2 * s for s in step)

    logger.debug(f"Expanded {len(series)} monomials within {bound}")
    return TruncatedSeries(vars=cr.vars, bound=bound, coeffs=series)


def count_fibers(
        sp: SemigroupPresentation,
        ed: EssentialDivisors,
        bound: Sequence[int],
        threads: int = 1
) -> TruncatedSeries:
    """
    coeff(a) = #{ gamma in the semigroup : <w_k, gamma> = a_k for all k }

    Raises:
        NoInteriorWeight when no essential vector is interior
    """
    bound = tuple(int(b) for b in bound)
    if len(bound) != ed.p:
        raise DimensionMismatch(f"Bound has {len(bound)} entries for {ed.p} variables", datum=list(bound))
    if ed.s0 < 1:
        raise NoInteriorWeight("Essential data has no origin valuation", datum=list(ed.groups))

    coeffs: Dict[Exponent, int] = defaultdict(int)
    for gamma in enumerate_semigroup(sp, ed.ws, bound, threads=threads):
        coeffs[monomial_map(gamma, ed)] += 1
    return TruncatedSeries(vars=ed.p, bound=bound, coeffs=dict(coeffs))


def count_generated(
        generators: Sequence[RationalVector],
        weights: Sequence[Sequence[int]],
        bound: Sequence[int]
) -> TruncatedSeries:
    """
    Truncated Poincare series of the affine semigroup generated by a list of
    nonnegative vectors: distinct elements binned by their weights
    """
    bound = tuple(int(b) for b in bound)
    if len(bound) != len(weights):
        raise DimensionMismatch(f"{len(weights)} weights but {len(bound)} bounds", datum=list(bound))
    if not any(all(x > 0 for x in w) for w in weights) or any(x < 0 for w in weights for x in w):
        raise NoInteriorWeight("Weights must be nonnegative with one interior weight", datum=[list(w) for w in weights])
    for gen in generators:
        if gen.is_zero() or not gen.is_nonnegative():
            raise NoInteriorWeight("Generators must be nonzero and nonnegative", datum=gen)

    d = generators[0].dim if generators else len(weights[0])
    origin = RationalVector.zero(d)
    seen = {origin}
    frontier = [origin]
    while frontier:
        following = []
        for element in frontier:
            for gen in generators:
                candidate = element + gen
                if candidate in seen:
                    continue
                if all(candidate.pairing(w) <= b for w, b in zip(weights, bound)):
                    seen.add(candidate)
                    following.append(candidate)
        frontier = following

    coeffs: Dict[Exponent, int] = defaultdict(int)
    for element in seen:
        coeffs[_pairings(element, weights)] += 1
    return TruncatedSeries(vars=len(weights), bound=bound, coeffs=dict(coeffs))


def specialize_sum(cr: CyclotomicRational) -> CyclotomicRational:
    """Substitute t_k -> t: every exponent vector becomes its coordinate sum"""
    return CyclotomicRational(
        vars=1,
        groups=(0, 0, 1),
        numerator=tuple((sum(e),) for e in cr.numerator),
        denominator=tuple((sum(e),) for e in cr.denominator)
    )


def compose_power(cr: CyclotomicRational, k) -> CyclotomicRational:
    """Substitute t -> t^k in a one-variable form"""
    k = Fraction(k)
    if cr.vars != 1:
        raise DimensionMismatch(f"Composition needs one variable, got {cr.vars}", datum=cr.vars)

    def scaled(e: Exponent) -> Exponent:
        value = k * e[0]
        if value.denominator != 1:
            raise NonIntegralPairing(f"Exponent {e[0]} * {k} is not an integer", datum=str(k))
        return (value.numerator,)

    return CyclotomicRational(
        vars=1,
        groups=cr.groups,
        numerator=tuple(scaled(e) for e in cr.numerator),
        denominator=tuple(scaled(e) for e in cr.denominator)
    )


def indicator_vector(groups: Tuple[int, int, int], include_codim2: bool = False) -> Exponent:
    """I = 1 on origin-group coordinates; J additionally on the codimension-two group"""
    s1, s2, s0 = groups
    if include_codim2:
        return (0,) * s1 + (1,) * (s2 + s0)
    return (0,) * (s1 + s2) + (1,) * s0


def indicator_multiplicities(cr: CyclotomicRational) -> Dict[str, int]:
    """Observed denominator multiplicities of the indicator factors"""
    return {
        'origin': cr.multiplicity(indicator_vector(cr.groups)),
        'codim2_and_origin': cr.multiplicity(indicator_vector(cr.groups, include_codim2=True)),
    }


def predicted_indicator_multiplicities(sp: SemigroupPresentation, ed: EssentialDivisors) -> Dict[str, Optional[int]]:
    """
    Indicator multiplicities predicted from the essential matrix (d > 2)

    mult(I) = d - c, plus one when s2 = 0 and column c equals I.
    For s2 = 1, mult(J) counts the columns c-1, c equal to J, plus one for
    the quadratic cone (s1 = 0), whose gamma_1 pairs to J.
    """
    columns = [tuple(w[j] for w in ed.ws) for j in range(sp.d)]
    origin = indicator_vector(ed.groups)
    both = indicator_vector(ed.groups, include_codim2=True)

    predicted_origin = sp.d - sp.c
    if ed.s2 == 0 and columns[sp.c - 1] == origin:
        predicted_origin += 1

    predicted_both = None
    if ed.s2 == 1:
        predicted_both = sum(1 for j in (sp.c - 2, sp.c - 1) if columns[j] == both)
        if ed.s1 == 0:
            predicted_both += 1

    return {'origin': predicted_origin, 'codim2_and_origin': predicted_both}

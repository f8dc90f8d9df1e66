# services/zeta_service.py

"""
Zeta Service
Monodromy zeta function of the branch read off the one-variable
specialization of the Poincare series, and the equisingularity test
between Poincare series of different dimensions
"""

import logging
from collections import Counter
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from models.qo_models import EssentialDivisors, SemigroupPresentation
from models.series_models import CyclotomicRational, ShortFormInput, ZetaCase, ZetaReport
from services.poincare_service import (
    compose_power,
    indicator_vector,
    poincare_forward,
    short_form,
    specialize_sum,
)
from utils.exceptions import GroupMismatch, InvalidBranchData

logger = logging.getLogger(__name__)


def _one_variable(numerator: Sequence[int], denominator: Sequence[int]) -> CyclotomicRational:
    return CyclotomicRational(
        vars=1,
        groups=(0, 0, 1),
        numerator=tuple((e,) for e in numerator),
        denominator=tuple((e,) for e in denominator)
    )


def _plane_branch_data(exps: Sequence[Fraction]) -> Tuple[List[int], Tuple[int, ...]]:
    exps = [Fraction(x) for x in exps]
    for x in exps:
        if x <= 0:
            raise InvalidBranchData(f"Exponent {x} is not positive", datum=[str(e) for e in exps])
    for a, b in zip(exps, exps[1:]):
        if not a < b:
            raise InvalidBranchData("Exponents are not strictly increasing", datum=[str(e) for e in exps])

    ns: List[int] = []
    level = 1
    for x in exps:
        following = lcm(level, x.denominator)
        if following == level:
            raise InvalidBranchData(f"Exponent {x} is not characteristic", datum=[str(e) for e in exps])
        ns.append(following // level)
        level = following

    gammas = []
    for j, x in enumerate(exps):
        gammas.append(x if j == 0 else ns[j - 1] * gammas[-1] + x - exps[j - 1])
    return ns, (level,) + tuple((level * gamma).numerator for gamma in gammas)


def plane_branch_semigroup(exps: Sequence[Fraction]) -> Tuple[int, ...]:
    """Generators (beta_0, beta_1, ..., beta_k) of the semigroup of a plane branch"""
    return _plane_branch_data(exps)[1]


def plane_branch_series(exps: Sequence[Fraction]) -> CyclotomicRational:
    """
    Semigroup generating series of a plane branch in short form

    prod(1 - t^(n_i beta_i)) / ((1 - t^beta_0) prod(1 - t^beta_i)); the smooth
    branch gives 1/(1 - t).
    """
    ns, generators = _plane_branch_data(exps)
    numerator = [n * beta for n, beta in zip(ns, generators[1:])]
    return short_form(_one_variable(numerator, list(generators)))


def _multiply(*forms: CyclotomicRational) -> CyclotomicRational:
    return _one_variable(
        [e[0] for form in forms for e in form.numerator],
        [e[0] for form in forms for e in form.denominator]
    )


def _reciprocal(form: CyclotomicRational) -> CyclotomicRational:
    return _one_variable([e[0] for e in form.denominator], [e[0] for e in form.numerator])


def zeta_mcewan_nemethi(sp: SemigroupPresentation, ed: EssentialDivisors) -> ZetaReport:
    """
    Zeta function of the monodromy and the specialization identity

    Case A (lambda_1 has a nonzero second coordinate): zeta = 1 - t^n.
    Case B: zeta = zeta(h)(t^(n / deg h)) for the plane branch h given by the
    first coordinates of lambda_1..lambda_i0.
    """
    b = ed.weight_sum()
    n = sp.degree
    lambdas = sp.lambdas

    def pairing(j: int, scale: int = 1) -> int:
        return (sp.gammas[j].pairing(b) * scale).numerator

    tail_indices: Sequence[int]
    i0 = None
    h_semigroup: Tuple[int, ...] = ()
    if lambdas[0][1] != 0:
        case = ZetaCase.A
        zeta = _one_variable([n], [])
        leading = _reciprocal(compose_power(zeta, Fraction(b[0], n)))
        tail_indices = range(sp.g)
    else:
        case = ZetaCase.B
        i0 = max(i + 1 for i, lam in enumerate(lambdas) if lam[1] == 0)
        h_exps = [lam[0] for lam in lambdas[:i0]]
        h_series = plane_branch_series(h_exps)
        h_semigroup = plane_branch_semigroup(h_exps)
        degree_h = h_semigroup[0]
        zeta = compose_power(h_series, Fraction(n, degree_h))
        leading = compose_power(h_series, Fraction(b[0], degree_h))
        tail_indices = range(i0, sp.g)

    tail = _one_variable(
        [pairing(j, sp.ns[j]) for j in tail_indices],
        [pairing(j) for j in tail_indices] + list(b[1:])
    )
    product = short_form(_multiply(leading, tail))
    specialized = short_form(specialize_sum(poincare_forward(sp, ed)))
    verified = specialized == product

    if not verified:
        logger.warning(f"Specialization identity failed: {specialized} != {product}")
    logger.info(f"Zeta case {case.value}, n={n}, b={b}, verified={verified}")
    return ZetaReport(
        case=case, b=b, n=n, zeta=zeta,
        identity_verified=verified, i0=i0, h_semigroup=h_semigroup
    )


def equi_check(first: ShortFormInput, second: ShortFormInput) -> Optional[int]:
    """
    k such that the first series is the second times (1 - t_origin)^(-k)

    Returns:
        k >= 0, or None when the series are not related that way

    Raises:
        GroupMismatch when groupings differ
    """
    a, b = first.cr, second.cr
    if a.groups != b.groups or a.vars != b.vars or a.two_group_mode != b.two_group_mode:
        raise GroupMismatch(f"Groupings {a.groups} and {b.groups} differ", datum=[list(a.groups), list(b.groups)])

    if a.numerator != b.numerator:
        return None
    extra = Counter(a.denominator)
    extra.subtract(Counter(b.denominator))
    if any(v < 0 for v in extra.values()):
        return None
    extra = +extra
    indicator = indicator_vector(a.groups)
    if set(extra) - {indicator}:
        return None
    return extra[indicator]

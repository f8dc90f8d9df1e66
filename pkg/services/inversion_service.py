# services/inversion_service.py

"""
Inversion Service
Recovers the normalized characteristic exponents from the short form of a
Poincare series and its variable grouping
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from models.lattice_models import RationalVector
from models.qo_models import CharacteristicSequence
from models.series_models import (
    CyclotomicRational,
    Exponent,
    RecoveryBranch,
    RecoveryReport,
    ShortFormInput,
)
from services.lattice_service import is_solvable, solve_exact
from services.poincare_service import indicator_vector
from services.semigroup_service import lambdas_from_gammas, validate
from utils.exceptions import (
    AmbiguousOrder,
    GroupMismatch,
    NoPairing,
    NotNormalizable,
    QuasiOrdinaryError,
    UnknownShape,
)
from utils.helpers import lex_sorted

logger = logging.getLogger(__name__)

Pair = Tuple[Exponent, Exponent, int]


def _leq(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _ray_multiple(beta: Exponent, alpha: Exponent):
    """n with beta = n * alpha, or None"""
    if not any(alpha):
        return None
    k = next(i for i, x in enumerate(alpha) if x != 0)
    n, r = divmod(beta[k], alpha[k])
    if r or n < 2:
        return None
    if any(b != n * a for a, b in zip(alpha, beta)):
        return None
    return n


def pair_factors(cr: CyclotomicRational) -> Tuple[int, List[Pair]]:
    """
    Match every numerator factor beta_i with the largest denominator factor
    alpha on its ray such that beta_i = n_i * alpha, n_i >= 2

    Returns:
        (d, [(beta_i, alpha_{d+i}, n_i)]) with beta_1 < ... < beta_g

    Raises:
        AmbiguousOrder, NoPairing
    """
    d = len(cr.denominator) - len(cr.numerator)
    betas = sorted(cr.numerator)
    for a, b in zip(betas, betas[1:]):
        if not _leq(a, b):
            raise AmbiguousOrder("Numerator exponents are not totally ordered", datum=[list(a), list(b)])

    pool = Counter(cr.denominator)
    pairs = []
    for beta in betas:
        best = None
        for alpha in sorted(pool):
            if pool[alpha] == 0:
                continue
            n = _ray_multiple(beta, alpha)
            if n is not None and (best is None or n < best[1]):
                best = (alpha, n)
        if best is None:
            raise NoPairing(f"No denominator factor divides (1 - t^{beta})", datum=list(beta))
        pool[best[0]] -= 1
        pairs.append((beta, best[0], best[1]))

    logger.debug(f"Paired factors: {pairs}")
    return d, pairs


def _unpaired(cr: CyclotomicRational, pairs: Sequence[Pair]) -> Counter:
    pool = Counter(cr.denominator)
    pool.subtract(Counter(alpha for _, alpha, _ in pairs))
    return +pool


def _solve_all(columns: List[Exponent], alphas: Sequence[Exponent], log: List[Dict]) -> List[Tuple[Fraction, ...]]:
    solutions = []
    for j, alpha in enumerate(alphas):
        solution = solve_exact(columns, alpha)
        log.append({
            'system': j + 1,
            'columns': [list(col) for col in columns],
            'rhs': list(alpha),
            'solution': list(solution)
        })
        solutions.append(solution)
    return solutions


def _padded(solution: Sequence[Fraction], d: int) -> RationalVector:
    return RationalVector(tuple(solution) + tuple(Fraction(0) for _ in range(d - len(solution))))


def _quadratic_cone_report() -> RecoveryReport:
    half = RationalVector((Fraction(1, 2), Fraction(1, 2)))
    return RecoveryReport(
        d=2, g=1, c=2, ns=(2,),
        gammas=(half,), lambdas=(half,),
        branch=RecoveryBranch.DIM2_QUADRATIC_CONE
    )


def _is_quadratic_cone(cr: CyclotomicRational) -> bool:
    return (
        cr.two_group_mode
        and cr.vars == 1
        and cr.numerator == ((2,),)
        and cr.denominator == ((1,), (1,), (1,))
    )


def _solve_dim2(unpaired: Counter, alphas, log) -> List[RationalVector]:
    columns = sorted(unpaired.elements())
    if len(columns) != 2:
        raise UnknownShape(f"Surface case needs 2 unpaired factors, found {len(columns)}", datum=[list(c) for c in columns])
    return [_padded(s, 2) for s in _solve_all(columns, alphas, log)]


def _solve_with_indicator(cr, d, unpaired: Counter, alphas, log, allow_extension: bool) -> List[RationalVector]:
    indicator = indicator_vector(cr.groups)
    c = d - unpaired[indicator]
    columns = sorted(e for e in unpaired.elements() if e != indicator)
    if c < 1 or len(columns) != c:
        raise UnknownShape(
            f"Indicator multiplicity {unpaired[indicator]} leaves {len(columns)} columns for c = {c}",
            datum=list(cr.groups)
        )
    if allow_extension and not is_solvable(columns, alphas[-1]):
        logger.info("Last system unsolvable, adding the indicator column")
        columns = columns + [indicator]
        c += 1
    return [_padded(s, d) for s in _solve_all(columns, alphas, log)]


def _solve_single_codim2(cr, d, ns, unpaired: Counter, alphas, log) -> List[RationalVector]:
    s1 = cr.groups[0]
    c = s1 + 2
    if ns[-1] != 2 or c > d:
        raise UnknownShape(f"s2 = 1 needs n_g = 2 and c = s1 + 2 <= d (n_g={ns[-1]})", datum=list(ns))

    diagonal: Dict[int, int] = {}
    for vector in unpaired.elements():
        support = [r for r in range(s1) if vector[r] != 0]
        if not support:
            continue
        if len(support) != 1 or support[0] in diagonal:
            raise UnknownShape("First-group projections are not diagonal", datum=list(vector))
        diagonal[support[0]] = vector[support[0]]
    if len(diagonal) != s1:
        raise UnknownShape(f"Found {len(diagonal)} diagonal entries for s1 = {s1}", datum=list(cr.groups))

    g = len(alphas)
    gammas = []
    for j, alpha in enumerate(alphas):
        coords = [Fraction(alpha[r], diagonal[r]) for r in range(s1)]
        tail = Fraction(1, 2) if j == g - 1 else Fraction(0)
        coords += [tail, tail]
        log.append({'system': j + 1, 'diagonal': [diagonal[r] for r in range(s1)], 'rhs': list(alpha[:s1]),
                    'solution': coords})
        gammas.append(_padded(coords, d))
    return gammas


def recover(sf: ShortFormInput) -> RecoveryReport:
    """
    Recover the normalized characteristic sequence from a short form

    Args:
        sf: Short-form series with its grouping

    Returns:
        RecoveryReport with lex-sorted lambdas

    Raises:
        InconsistentSystem, NotNormalizable, UnknownShape, NoPairing, AmbiguousOrder
    """
    cr = sf.cr
    if not cr.is_short:
        raise UnknownShape("Input is not in short form", datum=list(cr.groups))
    if not cr.numerator or len(cr.denominator) <= len(cr.numerator):
        raise UnknownShape("Need |denominator| > |numerator| >= 1", datum=[len(cr.numerator), len(cr.denominator)])
    s1, s2, s0 = cr.groups
    if s0 < 1:
        raise UnknownShape("Origin group is empty", datum=list(cr.groups))

    if _is_quadratic_cone(cr):
        logger.info("Recovered the quadratic cone")
        return _quadratic_cone_report()

    d, pairs = pair_factors(cr)
    if d < 2:
        raise UnknownShape(f"Derived dimension {d} < 2", datum=d)
    ns = tuple(n for _, _, n in pairs)
    alphas = [alpha for _, alpha, _ in pairs]
    unpaired = _unpaired(cr, pairs)
    log: List[Dict] = []

    if cr.two_group_mode:
        if d != 2 or s2 != 0:
            raise UnknownShape(f"Two-group mode with d = {d}, s2 = {s2}", datum=list(cr.groups))
        branch = RecoveryBranch.DIM2
        gammas = _solve_dim2(unpaired, alphas, log)
    elif d == 2:
        raise UnknownShape("Surface series must use two-group mode", datum=list(cr.groups))
    elif s2 >= 2:
        branch = RecoveryBranch.S2_GE_2
        gammas = _solve_with_indicator(cr, d, unpaired, alphas, log, allow_extension=False)
    elif s2 == 0:
        branch = RecoveryBranch.S2_EQ_0
        gammas = _solve_with_indicator(cr, d, unpaired, alphas, log, allow_extension=True)
    else:
        branch = RecoveryBranch.S2_EQ_1
        gammas = _solve_single_codim2(cr, d, ns, unpaired, alphas, log)

    lambdas = lambdas_from_gammas(gammas, ns)
    all_vectors = lex_sorted(tuple(lambdas) + tuple(gammas), d)
    lambdas, gammas = all_vectors[:len(lambdas)], all_vectors[len(lambdas):]

    try:
        sp = validate(CharacteristicSequence(d, lambdas))
    except QuasiOrdinaryError as e:
        raise NotNormalizable(f"Recovered exponents are invalid: {e.name}: {e}", datum=lambdas)
    if not sp.normalized:
        raise NotNormalizable("Recovered exponents are not normalized", datum=lambdas)
    if sp.ns != ns:
        raise NotNormalizable(f"Recovered indices {sp.ns} differ from paired {ns}", datum=lambdas)

    logger.info(f"Recovered branch={branch.value}, d={d}, g={len(ns)}, c={sp.c}, n={ns}")
    return RecoveryReport(
        d=d, g=len(ns), c=sp.c, ns=ns,
        gammas=tuple(gammas), lambdas=tuple(lambdas),
        branch=branch, solve_log=log
    )


def permute_within_groups(cr: CyclotomicRational, permutation: Sequence[int]) -> CyclotomicRational:
    """Reorder variables; the permutation must map every group onto itself"""
    s1, s2, s0 = cr.groups
    bounds = [(0, s1), (s1, s1 + s2), (s1 + s2, cr.vars)]
    if sorted(permutation) != list(range(cr.vars)):
        raise GroupMismatch("Not a permutation of the variables", datum=list(permutation))
    for k, source in enumerate(permutation):
        group_k = next(i for i, (lo, hi) in enumerate(bounds) if lo <= k < hi)
        group_source = next(i for i, (lo, hi) in enumerate(bounds) if lo <= source < hi)
        if group_k != group_source:
            raise GroupMismatch(f"Variable {source + 1} moved out of its group", datum=list(permutation))

    def apply(e: Exponent) -> Exponent:
        return tuple(e[source] for source in permutation)

    return CyclotomicRational(
        vars=cr.vars,
        groups=cr.groups,
        numerator=tuple(apply(e) for e in cr.numerator),
        denominator=tuple(apply(e) for e in cr.denominator),
        two_group_mode=cr.two_group_mode
    )

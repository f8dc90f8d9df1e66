# models/series_models.py

"""
Data models for Poincare series
Cyclotomic forms, truncated expansions and the reports of the inversion
and zeta computations
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from models.lattice_models import RationalVector
from utils.exceptions import DivergentAtOrigin

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class RecoveryBranch(Enum):
    """Case of the inversion algorithm"""
    S2_GE_2 = "S2_GE_2"
    S2_EQ_0 = "S2_EQ_0"
    S2_EQ_1 = "S2_EQ_1"
    DIM2 = "DIM2"
    DIM2_QUADRATIC_CONE = "DIM2_QUADRATIC_CONE"


class ZetaCase(Enum):
    """Monodromy zeta case"""
    A = "A"  # lambda_1 has a nonzero second coordinate
    B = "B"


@dataclass(frozen=True)
class CyclotomicRational:
    """prod(1 - t^beta) / prod(1 - t^alpha) over exponent multisets"""
    vars: int
    groups: Tuple[int, int, int]
    numerator: Tuple[Exponent, ...]
    denominator: Tuple[Exponent, ...]
    two_group_mode: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'groups', tuple(int(x) for x in self.groups))
        object.__setattr__(self, 'numerator', tuple(sorted(tuple(int(x) for x in e) for e in self.numerator)))
        object.__setattr__(self, 'denominator', tuple(sorted(tuple(int(x) for x in e) for e in self.denominator)))
        for e in self.numerator + self.denominator:
            if len(e) != self.vars:
                raise ValueError(f"Exponent {e} does not have {self.vars} entries")
            if any(x < 0 for x in e):
                raise ValueError(f"Exponent {e} has a negative entry")
        if any(not any(e) for e in self.numerator):
            raise ValueError("Numerator exponents must be nonzero")
        if any(not any(e) for e in self.denominator):
            raise DivergentAtOrigin("Denominator factor 1 - t^0 vanishes at the origin", datum=list(self.denominator))
        if sum(self.groups) != self.vars:
            raise ValueError(f"Groups {self.groups} do not add up to {self.vars} variables")

    @property
    def is_short(self) -> bool:
        return not (Counter(self.numerator) & Counter(self.denominator))

    def multiplicity(self, exponent: Exponent, in_denominator: bool = True) -> int:
        pool = self.denominator if in_denominator else self.numerator
        return sum(1 for e in pool if e == tuple(exponent))


@dataclass
class TruncatedSeries:
    """Coefficients of a power series inside the box prod [0, bound_k]"""
    vars: int
    bound: Tuple[int, ...]
    coeffs: Dict[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        self.bound = tuple(int(b) for b in self.bound)
        self.coeffs = {tuple(a): int(v) for a, v in self.coeffs.items() if v != 0}

    def coefficient(self, a: Exponent) -> int:
        return self.coeffs.get(tuple(a), 0)


@dataclass(frozen=True)
class ShortFormInput:
    """Short-form Poincare series together with its variable grouping"""
    cr: CyclotomicRational

    @property
    def groups(self) -> Tuple[int, int, int]:
        return self.cr.groups

    @property
    def two_group_mode(self) -> bool:
        return self.cr.two_group_mode


@dataclass
class RecoveryReport:
    """Characteristic data recovered from a short form"""
    d: int
    g: int
    c: int
    ns: Tuple[int, ...]
    gammas: Tuple[RationalVector, ...]
    lambdas: Tuple[RationalVector, ...]
    branch: RecoveryBranch
    solve_log: List[Dict] = field(default_factory=list)


@dataclass
class ZetaReport:
    """Monodromy zeta function and the specialization identity"""
    case: ZetaCase
    b: Tuple[int, ...]
    n: int
    zeta: CyclotomicRational
    identity_verified: bool
    i0: Optional[int] = None
    h_semigroup: Tuple[int, ...] = ()

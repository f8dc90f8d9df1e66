# models/qo_models.py

"""
Data models for quasi-ordinary branches
Characteristic sequences, semigroup presentations, singular loci and
essential divisors
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from models.lattice_models import IntegerMatrix, LatticeBasis, RationalVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacteristicSequence:
    """Characteristic exponents lambda_1 < ... < lambda_g in Q^d"""
    d: int
    lambdas: Tuple[RationalVector, ...]

    def __post_init__(self):
        object.__setattr__(self, 'lambdas', tuple(self.lambdas))

    @property
    def g(self) -> int:
        return len(self.lambdas)

    def column(self, i: int) -> Tuple:
        """(lambda_1^i, ..., lambda_g^i)"""
        return tuple(lam[i] for lam in self.lambdas)


@dataclass(frozen=True)
class SemigroupPresentation:
    """Validated characteristic data with derived generators and lattices"""
    char_seq: CharacteristicSequence
    gammas: Tuple[RationalVector, ...]
    ns: Tuple[int, ...]
    c: int
    lattice_N: LatticeBasis
    m: Tuple[int, ...]
    normalized: bool
    chain: Tuple[LatticeBasis, ...] = field(default=(), compare=False, repr=False)  # M_0 .. M_g
    degree: int = field(init=False)

    def __post_init__(self):
        degree = 1
        for n in self.ns:
            degree *= n
        object.__setattr__(self, 'degree', degree)

    @property
    def d(self) -> int:
        return self.char_seq.d

    @property
    def g(self) -> int:
        return self.char_seq.g

    @property
    def lambdas(self) -> Tuple[RationalVector, ...]:
        return self.char_seq.lambdas

    def u(self, i: int) -> Tuple[int, ...]:
        """u_i = m_i e_i"""
        return tuple(self.m[i] if k == i else 0 for k in range(self.d))


@dataclass(frozen=True)
class SingularLocus:
    """Components of the singular locus (0-based coordinate indices)"""
    codim1: Tuple[int, ...]
    codim2: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class EssentialDivisors:
    """Grouped essential valuations w_1..w_p"""
    ws: Tuple[Tuple[int, ...], ...]
    s1: int
    s2: int
    s0: int
    two_group_mode: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'ws', tuple(tuple(int(x) for x in w) for w in self.ws))
        if self.s1 + self.s2 + self.s0 != len(self.ws):
            raise ValueError(f"Group sizes {self.groups} do not add up to {len(self.ws)}")

    @property
    def p(self) -> int:
        return len(self.ws)

    @property
    def groups(self) -> Tuple[int, int, int]:
        return (self.s1, self.s2, self.s0)

    def weight_sum(self) -> Tuple[int, ...]:
        """Coordinates of w_1 + ... + w_p"""
        if not self.ws:
            return tuple()
        return tuple(sum(col) for col in zip(*self.ws))


@dataclass
class StructureReport:
    """Outcome of the block-structure checks on an essential matrix"""
    checked: bool = False
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class EssentialMatrix:
    """p x d matrix of pairings <w_i, e_j>"""
    matrix: IntegerMatrix
    report: StructureReport = field(default_factory=StructureReport, compare=False)

# models/lattice_models.py

"""
Exact lattice data structures
Rational vectors, integer matrices and scaled lattice bases
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Sequence, Tuple

logger = logging.getLogger(__name__)


class LatticeMode(Enum):
    """Position of a lattice relative to Z^d"""
    SUBLATTICE = "SUBLATTICE"  # contained in Z^d, e.g. N
    OVERLATTICE = "OVERLATTICE"  # contains Z^d, e.g. the M_j


@dataclass(frozen=True)
class RationalVector:
    """Exponent vector in Q^d"""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(Fraction(x) for x in self.coords))

    @classmethod
    def zero(cls, d: int) -> 'RationalVector':
        return cls(tuple(Fraction(0) for _ in range(d)))

    @classmethod
    def unit(cls, i: int, d: int) -> 'RationalVector':
        return cls(tuple(Fraction(1 if k == i else 0) for k in range(d)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: 'RationalVector') -> 'RationalVector':
        return RationalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: 'RationalVector') -> 'RationalVector':
        return RationalVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, k) -> 'RationalVector':
        return RationalVector(tuple(k * a for a in self.coords))

    def pairing(self, w: Sequence[int]) -> Fraction:
        """<w, self> for an integral (or rational) weight"""
        return sum((Fraction(wi) * a for wi, a in zip(w, self.coords)), Fraction(0))

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def leq(self, other: 'RationalVector') -> bool:
        """Coordinatewise <="""
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def lt(self, other: 'RationalVector') -> bool:
        """Coordinatewise <= and not equal"""
        return self.leq(other) and self.coords != other.coords

    def to_ints(self) -> Tuple[int, ...]:
        return tuple(a.numerator for a in self.coords)

    def padded(self, k: int) -> 'RationalVector':
        return RationalVector(self.coords + tuple(Fraction(0) for _ in range(k)))

    def denominator_lcm(self) -> int:
        return lcm(1, *(a.denominator for a in self.coords))


@dataclass(frozen=True)
class IntegerMatrix:
    """Row-major integer matrix"""
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(f"Expected {self.rows * self.cols} entries, got {len(entries)}")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int = None) -> 'IntegerMatrix':
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("Column count required for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError(f"Row {r} does not have {cols} columns")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[Tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> 'IntegerMatrix':
        return IntegerMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)


@dataclass(frozen=True)
class LatticeBasis:
    """Lattice (1/D) * rowspan(basis) inside Q^d, basis in Hermite normal form"""
    ambient_dim: int
    basis: IntegerMatrix
    denominator_scale: int = 1
    mode: LatticeMode = LatticeMode.SUBLATTICE
    rank: int = field(init=False)

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise ValueError(f"Basis has {self.basis.cols} columns, ambient dimension is {self.ambient_dim}")
        if self.denominator_scale < 1:
            raise ValueError("Denominator scale must be positive")
        object.__setattr__(self, 'rank', self.basis.rows)

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.ambient_dim

    def generators(self) -> List[RationalVector]:
        """Basis vectors as rational vectors"""
        return [
            RationalVector(tuple(Fraction(x, self.denominator_scale) for x in r))
            for r in self.basis.to_rows()
        ]

# services/lattice_service.py

"""
Lattice Service
Exact integer/rational linear algebra: Hermite normal forms, membership,
indices, dual sublattices and exact linear solves
"""

import logging
from fractions import Fraction
from math import lcm, prod
from typing import List, Sequence, Tuple

from sympy import ZZ, Matrix, Rational
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form as _column_hnf

from models.lattice_models import IntegerMatrix, LatticeBasis, LatticeMode, RationalVector
from utils.exceptions import (
    DegenerateLattice,
    DimensionMismatch,
    InconsistentSystem,
    NotASublattice,
)

logger = logging.getLogger(__name__)


def _hnf_rows(rows: Sequence[Sequence[int]], cols: int) -> List[List[int]]:
    """Row-style HNF: pivots move right, positive, entries above reduced into [0, pivot)"""
    generators = [[int(x) for x in reversed(r)] for r in rows if any(r)]
    if not generators:
        return []
    # sympy scans only min(rows, columns) rows of the column-style input
    generators += [[0] * cols for _ in range(cols - len(generators))]
    column_style = DomainMatrix(
        [[ZZ(x) for x in r] for r in generators], (len(generators), cols), ZZ
    ).transpose()
    reduced = _column_hnf(column_style).transpose().to_Matrix().tolist()
    return [[int(x) for x in reversed(row)] for row in reversed(reduced)]


def hermite_normal_form(generators: IntegerMatrix) -> LatticeBasis:
    """
    Canonical row-style Hermite normal form of the integer row span

    Args:
        generators: Integer matrix whose rows span the lattice

    Returns:
        LatticeBasis with scale 1; zero rows are discarded
    """
    rows = _hnf_rows(generators.to_rows(), generators.cols)
    return LatticeBasis(
        ambient_dim=generators.cols,
        basis=IntegerMatrix.from_rows(rows, cols=generators.cols),
        denominator_scale=1,
        mode=LatticeMode.SUBLATTICE
    )


def _in_rowspan(target: Sequence[int], hnf_rows: Sequence[Sequence[int]]) -> bool:
    residual = list(target)
    for row in hnf_rows:
        p = next(i for i, x in enumerate(row) if x != 0)
        if any(residual[:p]):
            return False
        q, r = divmod(residual[p], row[p])
        if r:
            return False
        if q:
            residual = [x - q * y for x, y in zip(residual, row)]
    return not any(residual)


def member(v: Sequence[int], lattice: LatticeBasis) -> bool:
    """True iff the integer vector v lies in the lattice"""
    if len(v) != lattice.ambient_dim:
        raise DimensionMismatch(
            f"Vector of length {len(v)} against lattice of dimension {lattice.ambient_dim}",
            datum=list(v)
        )
    scaled = [lattice.denominator_scale * int(x) for x in v]
    return _in_rowspan(scaled, lattice.basis.to_rows())


def contains(x: RationalVector, lattice: LatticeBasis) -> bool:
    """True iff the rational vector x lies in the (possibly scaled) lattice"""
    if x.dim != lattice.ambient_dim:
        raise DimensionMismatch(
            f"Vector of length {x.dim} against lattice of dimension {lattice.ambient_dim}",
            datum=x
        )
    scaled = [lattice.denominator_scale * a for a in x.coords]
    if any(a.denominator != 1 for a in scaled):
        return False
    return _in_rowspan([a.numerator for a in scaled], lattice.basis.to_rows())


def standard_lattice(d: int) -> LatticeBasis:
    """Z^d"""
    return LatticeBasis(
        ambient_dim=d,
        basis=IntegerMatrix.from_rows([[1 if i == j else 0 for j in range(d)] for i in range(d)], cols=d),
        denominator_scale=1,
        mode=LatticeMode.OVERLATTICE
    )


def overlattice(vectors: Sequence[RationalVector], d: int) -> LatticeBasis:
    """Z^d + sum of Z x_j, stored as HNF rows over a common denominator"""
    for x in vectors:
        if x.dim != d:
            raise DimensionMismatch(f"Vector of length {x.dim} in dimension {d}", datum=x)
    scale = lcm(1, *(x.denominator_lcm() for x in vectors))
    rows = [[scale if i == j else 0 for j in range(d)] for i in range(d)]
    rows += [[(scale * a).numerator for a in x.coords] for x in vectors]
    hnf = _hnf_rows(rows, d)
    return LatticeBasis(
        ambient_dim=d,
        basis=IntegerMatrix.from_rows(hnf, cols=d),
        denominator_scale=scale,
        mode=LatticeMode.OVERLATTICE
    )


def _to_sympy(rows: Sequence[Sequence]) -> Matrix:
    return Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows])


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _scaled_matrix(lattice: LatticeBasis) -> Matrix:
    return _to_sympy(lattice.basis.to_rows()) / lattice.denominator_scale


def quotient_invariants(sub: LatticeBasis, sup: LatticeBasis) -> Tuple[int, ...]:
    """Invariant factors of sup/sub (Smith normal form of sub in sup coordinates)"""
    if sub.ambient_dim != sup.ambient_dim:
        raise DimensionMismatch(
            f"Lattices in dimensions {sub.ambient_dim} and {sup.ambient_dim}",
            datum=[sub.ambient_dim, sup.ambient_dim]
        )
    if not sub.is_full_rank or not sup.is_full_rank:
        raise DegenerateLattice("Index requires full-rank lattices", datum=[sub.rank, sup.rank])

    for generator in sub.generators():
        if not contains(generator, sup):
            raise NotASublattice("Generator of sub is not in sup", datum=generator)

    coordinates = _scaled_matrix(sub) * _scaled_matrix(sup).inv()
    factors = invariant_factors(coordinates, domain=ZZ)
    return tuple(abs(int(f)) for f in factors)


def lattice_index(sub: LatticeBasis, sup: LatticeBasis) -> int:
    """[sup : sub] for full-rank nested lattices"""
    return prod(quotient_invariants(sub, sup))


def dual_sublattice(gammas: Sequence[RationalVector], d: int) -> LatticeBasis:
    """
    N = { v in Z^d : <v, gamma_j> in Z for all j }

    N is the dual of M = Z^d + sum Z gamma_j, so its basis is the inverse
    transpose of the scaled HNF basis of M, brought back to HNF.
    """
    if not gammas:
        result = standard_lattice(d)
        return LatticeBasis(d, result.basis, 1, LatticeMode.SUBLATTICE)

    m = overlattice(gammas, d)
    inverse = _to_sympy(m.basis.to_rows()).inv()
    dual = (inverse.T * m.denominator_scale)
    rows = [[_to_fraction(dual[i, j]) for j in range(d)] for i in range(d)]
    for row in rows:
        for x in row:
            if x.denominator != 1:
                raise DegenerateLattice("Dual basis is not integral", datum=row)
    hnf = _hnf_rows([[x.numerator for x in row] for row in rows], d)
    logger.debug(f"Dual sublattice basis: {hnf}")
    return LatticeBasis(d, IntegerMatrix.from_rows(hnf, cols=d), 1, LatticeMode.SUBLATTICE)


def determinant(matrix: IntegerMatrix) -> int:
    """Exact determinant of a square integer matrix"""
    if matrix.rows != matrix.cols:
        raise DimensionMismatch(f"Matrix is {matrix.rows}x{matrix.cols}", datum=[matrix.rows, matrix.cols])
    if matrix.rows == 0:
        return 1
    return int(_to_sympy(matrix.to_rows()).det())


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a rational matrix given by rows"""
    if not rows or not rows[0]:
        return 0
    return int(_to_sympy(rows).rank())


def solve_exact(columns: Sequence[Sequence], rhs: Sequence) -> Tuple[Fraction, ...]:
    """
    Solve sum x_j * columns[j] = rhs exactly

    Args:
        columns: Column vectors of the system matrix
        rhs: Right-hand side

    Returns:
        The unique solution

    Raises:
        InconsistentSystem when the columns are dependent or rhs is not in their span
    """
    if not columns:
        if any(Fraction(x) != 0 for x in rhs):
            raise InconsistentSystem("Empty system with nonzero right-hand side", datum=list(rhs))
        return tuple()

    rows = [[col[i] for col in columns] for i in range(len(rhs))]
    a = _to_sympy(rows)
    if a.rank() < len(columns):
        raise InconsistentSystem(
            f"System matrix has rank {a.rank()} < {len(columns)} columns",
            datum=[list(c) for c in columns]
        )
    b = _to_sympy([[x] for x in rhs])
    try:
        solution, params = a.gauss_jordan_solve(b)
    except ValueError:
        raise InconsistentSystem("Right-hand side is not in the column span", datum=list(rhs))
    return tuple(_to_fraction(solution[j, 0]) for j in range(len(columns)))


def is_solvable(columns: Sequence[Sequence], rhs: Sequence) -> bool:
    """True iff solve_exact succeeds"""
    try:
        solve_exact(columns, rhs)
        return True
    except InconsistentSystem:
        return False



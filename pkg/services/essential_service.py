# services/essential_service.py

"""
Essential Divisor Service
Singular locus stratification, essential divisorial valuations grouped as
(codimension one, codimension two, origin) and the essential matrix with its
block-structure checks
"""

import logging
from fractions import Fraction
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

from config.settings import EngineSettings
from models.lattice_models import IntegerMatrix, LatticeBasis
from models.qo_models import (
    EssentialDivisors,
    EssentialMatrix,
    SemigroupPresentation,
    SingularLocus,
    StructureReport,
)
from models.series_models import RecoveryBranch
from services.lattice_service import determinant, exact_rank, hermite_normal_form, member
from utils.exceptions import BlockStructureViolation, BoxTooLarge

logger = logging.getLogger(__name__)


def singular_locus(sp: SemigroupPresentation) -> SingularLocus:
    """
    Components of the singular locus

    Z_i (i <= c) is a component unless lambda_1^i = ... = lambda_{g-1}^i = 0
    and lambda_g^i = 1/n_g; pairs of non-components give codimension-two
    components.
    """
    lambdas = sp.lambdas
    last_index = Fraction(1, sp.ns[-1])
    non_components = [
        i for i in range(sp.c)
        if all(lam[i] == 0 for lam in lambdas[:-1]) and lambdas[-1][i] == last_index
    ]
    codim1 = tuple(i for i in range(sp.c) if i not in non_components)
    codim2 = tuple(combinations(non_components, 2))
    logger.debug(f"Singular locus: codim1={codim1}, codim2={codim2}")
    return SingularLocus(codim1=codim1, codim2=codim2)


def _minimal_elements(points: Sequence[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Componentwise-minimal points, lex sorted"""
    kept: List[Tuple[int, ...]] = []
    for v in sorted(set(points)):
        if not any(all(a <= b for a, b in zip(u, v)) for u in kept):
            kept.append(v)
    return kept


def _box_points(support: Sequence[int], m: Sequence[int], d: int):
    ranges = [range(1, m[i] + 1) if i in support else range(0, 1) for i in range(d)]
    return product(*ranges)


def essential_over_origin(
        lattice_n: LatticeBasis,
        m: Sequence[int],
        max_points: int = EngineSettings.MAX_BOX_POINTS
) -> List[Tuple[int, ...]]:
    """
    Minimal elements of int(sigma) cap N for the standard orthant

    Any interior N-point with v_i > m_i dominates the interior point v - u_i,
    so the box prod [1, m_i] contains every minimal element.
    """
    d = lattice_n.ambient_dim
    volume = 1
    for x in m:
        volume *= x
    if volume > max_points:
        raise BoxTooLarge(f"Origin search box has {volume} points", datum=list(m))

    points = [v for v in _box_points(range(d), m, d) if member(v, lattice_n)]
    return _minimal_elements(points)


def essential_over_singular(
        sp: SemigroupPresentation,
        sl: SingularLocus,
        max_points: int = EngineSettings.MAX_BOX_POINTS
) -> EssentialDivisors:
    """
    Assemble the grouped essential valuations

    Args:
        sp: Semigroup presentation
        sl: Its singular locus
        max_points: Largest origin search box to scan

    Returns:
        EssentialDivisors with ws = codim-1 vectors u_i, codim-2 vectors,
        then origin-minimal vectors
    """
    d = sp.d
    n_last = sp.ns[-1]
    two_group_mode = d == 2

    codim1_vectors = [sp.u(i) for i in sl.codim1]

    codim2_vectors = []
    if not two_group_mode:
        for i, j in sl.codim2:
            for k in range(1, n_last):
                v = [0] * d
                v[i] = k
                v[j] = n_last - k
                codim2_vectors.append(tuple(v))

    origin_vectors = essential_over_origin(sp.lattice_N, sp.m, max_points)

    ed = EssentialDivisors(
        ws=tuple(codim1_vectors + codim2_vectors + origin_vectors),
        s1=len(codim1_vectors),
        s2=len(codim2_vectors),
        s0=len(origin_vectors),
        two_group_mode=two_group_mode
    )
    logger.info(f"Essential divisors: groups={ed.groups}, ws={ed.ws}")
    return ed


def _check_block_structure(ed: EssentialDivisors, d: int, sp: SemigroupPresentation) -> List[str]:
    rows = [list(w) for w in ed.ws]
    s1, s2, c = ed.s1, ed.s2, sp.c
    violations = []

    if d == 2:
        if ed.ws != ((1, 1),) and exact_rank(rows) != 2:
            violations.append("Surface essential matrix is singular")
        return violations

    for r in range(s1):
        for col in range(d):
            if col == r and rows[r][col] == 0:
                violations.append(f"Diagonal entry ({r + 1},{col + 1}) of D vanishes")
            if col != r and rows[r][col] != 0:
                violations.append(f"Codimension-one row {r + 1} is nonzero off the diagonal at column {col + 1}")

    for r in range(s1, s1 + s2):
        if any(rows[r][col] != 0 for col in list(range(s1)) + list(range(c, d))):
            violations.append(f"Codimension-two row {r + 1} is nonzero outside columns {s1 + 1}..{c}")

    for r in range(s1 + s2, ed.p):
        if any(rows[r][col] != 1 for col in range(c, d)):
            violations.append(f"Origin row {r + 1} is not all ones on columns {c + 1}..{d}")

    if s2 != 1:
        if c - s1 >= 2:
            block = [row[s1:c] for row in rows[s1:s1 + s2]]
            if exact_rank(block) != c - s1:
                violations.append(f"Block B does not have rank {c - s1}")
        if exact_rank([row[:c] for row in rows]) != c:
            violations.append(f"Columns 1..{c} do not have rank {c}")

    return violations


def essential_matrix(ed: EssentialDivisors, d: int, sp: Optional[SemigroupPresentation] = None) -> EssentialMatrix:
    """
    Stack the essential vectors as rows and check the block structure

    Raises:
        BlockStructureViolation when a normalized presentation breaks the
        expected structure; non-normalized input only records violations
    """
    matrix = IntegerMatrix.from_rows(ed.ws, cols=d)
    report = StructureReport()

    if sp is not None:
        report.checked = True
        report.violations = _check_block_structure(ed, d, sp)
        if report.violations:
            if sp.normalized:
                logger.error(f"Block structure violated: {report.violations}")
                raise BlockStructureViolation("; ".join(report.violations), datum=[list(w) for w in ed.ws])
            logger.warning(f"Non-normalized input, block structure report: {report.violations}")

    return EssentialMatrix(matrix=matrix, report=report)


def _face_lattice_determinant(lattice_n: LatticeBasis, face: Sequence[int]) -> int:
    """|det| of N cap R^face in the coordinates of the face"""
    d = lattice_n.ambient_dim
    outside = [i for i in range(d) if i not in face]
    order = outside + list(face)
    permuted = IntegerMatrix.from_rows([[row[i] for i in order] for row in lattice_n.basis.to_rows()], cols=d)
    hnf = hermite_normal_form(permuted).basis.to_rows()
    face_rows = [row[len(outside):] for row in hnf if not any(row[:len(outside)])]
    return abs(determinant(IntegerMatrix.from_rows(face_rows, cols=len(face))))


def toric_essential_divisors(lattice_n: LatticeBasis, m: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    Essential divisors over the singular locus of the toric variety of the
    orthant with lattice N: minimal elements of the union of relative
    interiors of non-regular faces

    A face on coordinates S is regular iff the u_i, i in S, generate N cap R^S.
    """
    d = lattice_n.ambient_dim
    points = []
    for size in range(2, d + 1):
        for face in combinations(range(d), size):
            expected = 1
            for i in face:
                expected *= m[i]
            if _face_lattice_determinant(lattice_n, face) == expected:
                continue
            points.extend(v for v in _box_points(face, m, d) if member(v, lattice_n))
    return _minimal_elements(points)


def branch_of(ed: EssentialDivisors) -> RecoveryBranch:
    """Inversion branch selected by the grouping"""
    if ed.two_group_mode:
        if ed.ws == ((1, 1),):
            return RecoveryBranch.DIM2_QUADRATIC_CONE
        return RecoveryBranch.DIM2
    if ed.s2 == 0:
        return RecoveryBranch.S2_EQ_0
    if ed.s2 == 1:
        return RecoveryBranch.S2_EQ_1
    return RecoveryBranch.S2_GE_2

# tests/test_lattice_service.py

"""
Tests for Hermite normal forms, lattice indices, duals and membership
"""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.lattice_models import IntegerMatrix, RationalVector
from services.lattice_service import (
    contains,
    determinant,
    dual_sublattice,
    hermite_normal_form,
    lattice_index,
    member,
    overlattice,
    quotient_invariants,
    solve_exact,
    standard_lattice,
)
from utils.exceptions import DimensionMismatch, InconsistentSystem, NotASublattice


def rv(*coords):
    return RationalVector(tuple(Fraction(x) for x in coords))


def hnf_rows(rows, cols=None):
    return hermite_normal_form(IntegerMatrix.from_rows(rows, cols=cols)).basis.to_rows()


def test_hnf_worked_rows():
    rows = hnf_rows([(3, 0, 0), (5, 1, 0), (0, 9, 0), (0, 0, 9)])
    assert rows == [(1, 2, 0), (0, 3, 0), (0, 0, 9)]
    assert determinant(IntegerMatrix.from_rows(rows)) == 27


def test_hnf_identity_and_index_two():
    assert hnf_rows([(1, 0), (0, 1)]) == [(1, 0), (0, 1)]
    assert hnf_rows([(2, 0), (0, 2), (1, 1)]) == [(1, 1), (0, 2)]


def test_hnf_drops_zero_rows():
    basis = hermite_normal_form(IntegerMatrix.from_rows([(0, 0), (2, 4)]))
    assert basis.rank == 1
    assert basis.basis.to_rows() == [(2, 4)]


def test_hnf_fewer_generators_than_columns():
    assert hnf_rows([(0, -2, 4)], cols=3) == [(0, 2, -4)]
    assert hnf_rows([(1, 0, 0, 5), (0, 0, 3, 1)], cols=4) == [(1, 0, 0, 5), (0, 0, 3, 1)]
    assert hnf_rows([(0, 0, 0)], cols=3) == []


square_rows = st.lists(
    st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3),
    min_size=3, max_size=5
)


@settings(max_examples=60, deadline=None)
@given(square_rows)
def test_hnf_idempotent(rows):
    once = hnf_rows(rows, cols=3)
    if once:
        assert hnf_rows(once, cols=3) == once


@settings(max_examples=60, deadline=None)
@given(square_rows)
def test_hnf_shape_and_redundant_generators(rows):
    reduced = hnf_rows(rows, cols=3)
    pivots = [next(j for j, x in enumerate(row) if x) for row in reduced]
    assert pivots == sorted(set(pivots))
    for r, p in enumerate(pivots):
        assert reduced[r][p] > 0
        assert all(0 <= reduced[above][p] < reduced[r][p] for above in range(r))
    extra = [a + b for a, b in zip(rows[0], rows[1])]
    assert hnf_rows(rows + [extra], cols=3) == reduced


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3), min_size=3, max_size=3))
def test_hnf_preserves_determinant(rows):
    det = abs(determinant(IntegerMatrix.from_rows(rows)))
    reduced = hnf_rows(rows, cols=3)
    if det == 0:
        assert len(reduced) < 3
    else:
        assert determinant(IntegerMatrix.from_rows(reduced)) == det


def test_lattice_index_worked_chain():
    m0 = standard_lattice(3)
    m1 = overlattice([rv("1/3", 0, 0)], 3)
    m2 = overlattice([rv("1/3", 0, 0), rv("5/9", "1/9", 0)], 3)
    assert lattice_index(m0, m1) == 3
    assert lattice_index(m1, m2) == 9
    assert lattice_index(m2, m2) == 1
    # multiplicative along the chain
    assert lattice_index(m0, m2) == 27


def test_quotient_invariants():
    m0 = standard_lattice(2)
    m1 = overlattice([rv("1/2", "1/2")], 2)
    assert quotient_invariants(m0, m1) == (1, 2)


def test_lattice_index_errors():
    m1 = overlattice([rv("1/3", 0)], 2)
    with pytest.raises(NotASublattice):
        lattice_index(m1, standard_lattice(2))
    with pytest.raises(DimensionMismatch):
        lattice_index(standard_lattice(2), standard_lattice(3))


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(min_value=0, max_value=8), st.integers(min_value=1, max_value=6),
                  st.integers(min_value=0, max_value=8), st.integers(min_value=1, max_value=6)),
        min_size=1, max_size=3
    )
)
def test_lattice_index_multiplicative(raw):
    vectors = [rv(Fraction(a, b), Fraction(c, e)) for a, b, c, e in raw]
    chain = [standard_lattice(2)] + [overlattice(vectors[:j], 2) for j in range(1, len(vectors) + 1)]
    steps = 1
    for lower, upper in zip(chain, chain[1:]):
        steps *= lattice_index(lower, upper)
    assert steps == lattice_index(chain[0], chain[-1])


def test_dual_sublattice_worked_example():
    n = dual_sublattice([rv("1/3", 0, 0), rv("11/9", "1/9", 0)], 3)
    assert n.basis.to_rows() == [(3, 3, 0), (0, 9, 0), (0, 0, 1)]
    for v in [(9, 0, 0), (3, 3, 0), (0, 0, 1), (3, 3, 1)]:
        assert member(v, n)
    assert not member((1, 0, 0), n)
    assert member((0, 0, 0), n)


def test_dual_sublattice_trivial_cases():
    assert dual_sublattice([], 2).basis.to_rows() == [(1, 0), (0, 1)]
    assert dual_sublattice([rv("1/2", "1/2")], 2).basis.to_rows() == [(1, 1), (0, 2)]


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=5),
       st.integers(min_value=2, max_value=6), st.integers(min_value=0, max_value=5))
def test_dual_sublattice_matches_brute_force(a, b, q, c):
    gammas = [rv(Fraction(a, q), Fraction(b, q)), rv(Fraction(c, q) + 1, Fraction(b, q))]
    n = dual_sublattice(gammas, 2)
    for v in product(range(-6, 7), repeat=2):
        expected = all(g.pairing(v).denominator == 1 for g in gammas)
        assert member(v, n) == expected


def test_member_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        member((1, 2), standard_lattice(3))


def test_contains_rational_vectors():
    m1 = overlattice([rv("1/3", 0, 0)], 3)
    assert contains(rv("2/3", 5, 0), m1)
    assert not contains(rv("1/2", 0, 0), m1)


def test_solve_exact():
    assert solve_exact([(0, 3), (3, 1)], (11, 4)) == (Fraction(1, 9), Fraction(11, 3))
    with pytest.raises(InconsistentSystem):
        solve_exact([(1, 1, 0)], (1, 0, 0))
    with pytest.raises(InconsistentSystem):
        solve_exact([(1, 1), (2, 2)], (3, 3))

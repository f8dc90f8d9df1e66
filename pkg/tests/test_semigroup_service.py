# tests/test_semigroup_service.py

"""
Tests for validation, generators, canonical forms and semigroup enumeration
"""

from fractions import Fraction
from itertools import product
from math import prod

import pytest

from conftest import charseq, quadratic_cone
from models.lattice_models import RationalVector
from services.lattice_service import lattice_index, overlattice, standard_lattice
from services.semigroup_service import (
    canonical_form,
    enumerate_semigroup,
    lambdas_from_gammas,
    pad_sequence,
    validate,
)
from utils.exceptions import (
    BadDimension,
    LexOrderViolated,
    NegativeExponent,
    NoInteriorWeight,
    NotStrictlyIncreasing,
    RedundantExponent,
)


def rv(*coords):
    return RationalVector(tuple(Fraction(x) for x in coords))


def test_validate_worked_example(worked_presentation):
    sp = worked_presentation
    assert sp.gammas == (rv("1/3", 0, 0), rv("11/9", "1/9", 0))
    assert sp.ns == (3, 9)
    assert sp.c == 2
    assert sp.m == (9, 9, 1)
    assert sp.degree == 27
    assert not sp.normalized


def test_validate_quadratic_cone():
    sp = validate(quadratic_cone(2))
    assert sp.gammas == (rv("1/2", "1/2"),)
    assert sp.ns == (2,)
    assert sp.c == 2
    assert sp.normalized


@pytest.mark.parametrize("cs, error", [
    (charseq(3, ("1/3", 0, 0), ("1/3", 0, 0)), NotStrictlyIncreasing),
    (charseq(1, ("1/2",)), BadDimension),
    (charseq(2), BadDimension),
    (charseq(3, ("1/2", 0)), BadDimension),
    (charseq(2, ("-1/2", "1/2")), NegativeExponent),
    (charseq(2, ("1/2", "3/2")), LexOrderViolated),
    (charseq(2, ("1/2", 0), ("3/2", 0)), RedundantExponent),
])
def test_validate_errors(cs, error):
    with pytest.raises(error):
        validate(cs)


def test_canonical_form(worked_presentation):
    sp = worked_presentation
    assert canonical_form(rv("11/9", "1/9", 0), sp) == ((0, 0, 0), (0, 1))
    assert canonical_form(rv(2, 0, 0), sp) == ((2, 0, 0), (0, 0))
    assert canonical_form(rv("1/9", 0, 0), sp) is None
    assert canonical_form(rv("1/3", 0, 1), sp) == ((0, 0, 1), (1, 0))


def test_canonical_form_matches_brute_force(worked_presentation):
    sp = worked_presentation
    for alpha in product(range(2), repeat=3):
        for l1, l2 in product(range(3), range(9)):
            gamma = rv(*alpha) + sp.gammas[0].scale(l1) + sp.gammas[1].scale(l2)
            assert canonical_form(gamma, sp) == (alpha, (l1, l2))


def test_enumerate_worked_example(worked_presentation):
    sp = worked_presentation
    elements = enumerate_semigroup(sp, [(9, 0, 0), (3, 3, 1)], (3, 1))
    assert elements == [rv(0, 0, 0), rv("1/3", 0, 0), rv(0, 0, 1)]


def test_enumerate_origin_only(worked_presentation):
    assert enumerate_semigroup(worked_presentation, [(9, 0, 0), (3, 3, 1)], (0, 0)) == [rv(0, 0, 0)]


def test_enumerate_quadratic_cone():
    sp = validate(quadratic_cone(3))
    elements = enumerate_semigroup(sp, [(1, 1, 0), (1, 1, 1)], (1, 1))
    assert set(elements) == {rv(0, 0, 0), rv(1, 0, 0), rv(0, 1, 0), rv(0, 0, 1), rv("1/2", "1/2", 0)}
    assert len(elements) == 5


def test_enumerate_is_thread_independent(worked_presentation):
    weights, bounds = [(9, 0, 0), (3, 3, 1)], (20, 8)
    single = enumerate_semigroup(worked_presentation, weights, bounds, threads=1)
    parallel = enumerate_semigroup(worked_presentation, weights, bounds, threads=4)
    assert single == parallel
    assert len(set(single)) == len(single)


def test_enumerate_needs_interior_weight(worked_presentation):
    with pytest.raises(NoInteriorWeight):
        enumerate_semigroup(worked_presentation, [(9, 0, 0)], (3,))


def test_lambdas_from_gammas_round_trip(corpus):
    for _, cs in corpus:
        sp = validate(cs)
        assert lambdas_from_gammas(sp.gammas, sp.ns) == cs.lambdas


def test_pad_sequence_keeps_invariants(worked_example):
    padded = validate(pad_sequence(worked_example, 2))
    assert padded.d == 5
    assert padded.ns == (3, 9)
    assert padded.c == 2
    assert padded.m == (9, 9, 1, 1, 1)


def test_exponent_indices_multiply_to_chain_index(corpus):
    for _, cs in corpus:
        sp = validate(cs)
        assert prod(sp.ns) == lattice_index(standard_lattice(cs.d), overlattice(cs.lambdas, cs.d))


def test_enumerated_elements_have_canonical_forms(corpus):
    checked = 0
    for _, cs in corpus[::5]:
        sp = validate(cs)
        elements = enumerate_semigroup(sp, [(1,) * sp.d], (3,))
        assert len(set(elements)) == len(elements)
        for element in elements:
            form = canonical_form(element, sp)
            assert form is not None
            alpha, ls = form
            rebuilt = RationalVector(alpha)
            for l, gamma in zip(ls, sp.gammas):
                rebuilt = rebuilt + gamma.scale(l)
            assert rebuilt == element
        checked += 1
    assert checked >= 40

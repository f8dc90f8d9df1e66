# tests/test_essential_service.py

"""
Tests for the singular locus, essential valuations and the essential matrix
"""

import pytest

from conftest import charseq, quadratic_cone
from models.series_models import RecoveryBranch
from services.essential_service import (
    branch_of,
    essential_matrix,
    essential_over_origin,
    essential_over_singular,
    singular_locus,
    toric_essential_divisors,
)
from services.lattice_service import dual_sublattice, member, standard_lattice
from services.semigroup_service import validate
from utils.exceptions import BoxTooLarge


def essential(cs):
    sp = validate(cs)
    return sp, essential_over_singular(sp, singular_locus(sp))


def test_singular_locus_examples(worked_presentation):
    sl = singular_locus(worked_presentation)
    assert sl.codim1 == (0,)
    assert sl.codim2 == ()

    sl = singular_locus(validate(quadratic_cone(4)))
    assert sl.codim1 == ()
    assert sl.codim2 == ((0, 1),)

    sl = singular_locus(validate(charseq(2, ("3/2", "1/2"))))
    assert sl.codim1 == (0,)
    assert sl.codim2 == ()


def test_essential_over_origin_examples(worked_presentation):
    assert essential_over_origin(worked_presentation.lattice_N, worked_presentation.m) == [(3, 3, 1)]
    lattice = standard_lattice(3)
    assert essential_over_origin(lattice, (1, 1, 1)) == [(1, 1, 1)]
    sp = validate(quadratic_cone(2))
    assert essential_over_origin(sp.lattice_N, sp.m) == [(1, 1)]


def test_essential_over_origin_guard():
    with pytest.raises(BoxTooLarge):
        essential_over_origin(standard_lattice(4), (100, 100, 100, 100))


def test_essential_over_singular_examples(worked_essential):
    assert worked_essential.ws == ((9, 0, 0), (3, 3, 1))
    assert worked_essential.groups == (1, 0, 1)

    _, ed = essential(quadratic_cone(3))
    assert ed.ws == ((1, 1, 0), (1, 1, 1))
    assert ed.groups == (0, 1, 1)

    _, ed = essential(quadratic_cone(2))
    assert ed.ws == ((1, 1),)
    assert ed.p == 1
    assert ed.two_group_mode


def test_codim2_vectors_split_n_g():
    _, ed = essential(charseq(3, ("1/3", "1/3", 0)))
    assert ed.groups[1] == 2
    assert ed.ws[:2] == ((1, 2, 0), (2, 1, 0))


def test_essential_matrix_examples(worked_presentation, worked_essential):
    em = essential_matrix(worked_essential, 3)
    assert em.matrix.to_rows() == [(9, 0, 0), (3, 3, 1)]
    assert not em.report.checked

    sp, ed = essential(quadratic_cone(3))
    em = essential_matrix(ed, 3, sp)
    assert em.matrix.column(2) == (0, 1)
    assert em.report.ok

    sp, ed = essential(charseq(2, ("3/2", "1/2")))
    assert essential_matrix(ed, 2, sp).matrix.to_rows() == [(2, 0), (1, 1)]


def test_origin_vectors_are_minimal_antichain(corpus):
    for _, cs in corpus[::5]:
        sp, ed = essential(cs)
        origin = ed.ws[ed.s1 + ed.s2:]
        for v in origin:
            assert all(x > 0 for x in v)
            assert member(v, sp.lattice_N)
        for u in origin:
            for v in origin:
                if u != v:
                    assert not all(a <= b for a, b in zip(u, v))


def test_block_structure_holds_on_corpus(corpus):
    for _, cs in corpus[::3]:
        sp, ed = essential(cs)
        assert essential_matrix(ed, sp.d, sp).report.ok


def test_branch_of_matches_corpus_labels(corpus):
    for branch, cs in corpus[::7]:
        _, ed = essential(cs)
        assert branch_of(ed) == branch


def test_branch_of_quadratic_cones():
    assert branch_of(essential(quadratic_cone(2))[1]) == RecoveryBranch.DIM2_QUADRATIC_CONE
    assert branch_of(essential(quadratic_cone(3))[1]) == RecoveryBranch.S2_EQ_1


def test_toric_essential_divisors_quadratic_cone():
    sp = validate(quadratic_cone(3))
    assert toric_essential_divisors(sp.lattice_N, sp.m) == [(1, 1, 0)]


def test_toric_essential_divisors_smooth_lattice():
    assert toric_essential_divisors(dual_sublattice([], 3), (1, 1, 1)) == []

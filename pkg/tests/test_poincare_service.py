# tests/test_poincare_service.py

"""
Tests for forward Poincare series, short forms, truncated expansion and the
counting oracles
"""

from fractions import Fraction

import pytest

from conftest import charseq, quadratic_cone
from models.lattice_models import RationalVector
from models.series_models import CyclotomicRational
from services.essential_service import essential_over_singular, singular_locus
from services.poincare_service import (
    compose_power,
    count_fibers,
    count_generated,
    expand,
    indicator_multiplicities,
    monomial_map,
    poincare_forward,
    poincare_weights,
    predicted_indicator_multiplicities,
    short_form,
    specialize_sum,
)
from services.semigroup_service import validate
from utils.exceptions import BoxTooLarge, DimensionMismatch, DivergentAtOrigin, NonIntegralPairing

PEJ2 = CyclotomicRational(
    vars=2, groups=(1, 0, 1),
    numerator=((99, 36),),
    denominator=((0, 1), (0, 3), (3, 1), (11, 4))
)


def rv(*coords):
    return RationalVector(tuple(Fraction(x) for x in coords))


def pipeline(cs):
    sp = validate(cs)
    ed = essential_over_singular(sp, singular_locus(sp))
    return sp, ed, poincare_forward(sp, ed)


def box_for(p):
    """Equal per-variable bounds summing to at most max(40, p)"""
    return (max(40 // p, 1),) * p


def test_monomial_map(worked_presentation, worked_essential):
    assert monomial_map(rv("11/9", "1/9", 0), worked_essential) == (11, 4)
    assert monomial_map(rv(0, 0, 0), worked_essential) == (0, 0)
    assert monomial_map(rv(1, 0, 0), worked_essential) == (9, 3)


def test_monomial_map_rejects_non_integral(worked_essential):
    with pytest.raises(NonIntegralPairing):
        monomial_map(rv("1/9", 0, 0), worked_essential)


def test_forward_worked_example(worked_presentation, worked_essential):
    cr = poincare_forward(worked_presentation, worked_essential)
    assert cr.numerator == ((9, 3), (99, 36))
    assert cr.denominator == ((0, 1), (0, 3), (3, 1), (9, 3), (11, 4))
    assert cr.groups == (1, 0, 1)


def test_forward_quadratic_cones():
    _, _, cr = pipeline(quadratic_cone(2))
    assert cr.numerator == ((2,),)
    assert cr.denominator == ((1,), (1,), (1,))
    assert cr.two_group_mode

    _, _, cr = pipeline(quadratic_cone(3))
    assert cr.numerator == ((2, 2),)
    assert cr.denominator == ((0, 1), (1, 1), (1, 1), (1, 1))


def test_short_form_examples(worked_presentation, worked_essential):
    short = short_form(poincare_forward(worked_presentation, worked_essential))
    assert short == PEJ2
    assert short_form(PEJ2) is PEJ2

    cr = CyclotomicRational(vars=2, groups=(0, 0, 2), numerator=((2, 2),), denominator=((2, 2), (1, 1)))
    cancelled = short_form(cr)
    assert cancelled.numerator == ()
    assert cancelled.denominator == ((1, 1),)


def test_expand_examples():
    cone = CyclotomicRational(vars=1, groups=(0, 0, 1), numerator=((2,),), denominator=((1,), (1,), (1,)))
    series = expand(cone, (4,))
    assert [series.coefficient((k,)) for k in range(5)] == [1, 3, 5, 7, 9]

    geometric = CyclotomicRational(vars=2, groups=(0, 0, 2), numerator=(), denominator=((0, 1),))
    series = expand(geometric, (2, 2))
    assert series.coeffs == {(0, 0): 1, (0, 1): 1, (0, 2): 1}

    series = expand(PEJ2, (12, 5))
    assert series.coefficient((3, 1)) == 1
    assert series.coefficient((0, 1)) == 1
    assert series.coefficient((0, 2)) == 1
    assert series.coefficient((0, 0)) == 1


def test_expand_errors():
    with pytest.raises(DivergentAtOrigin):
        CyclotomicRational(vars=1, groups=(0, 0, 1), numerator=(), denominator=((0,),))
    with pytest.raises(DimensionMismatch):
        expand(PEJ2, (3,))
    with pytest.raises(BoxTooLarge):
        expand(PEJ2, (1000, 1000), max_points=10000)


def test_count_fibers_examples(worked_presentation, worked_essential):
    sp, ed, _ = pipeline(quadratic_cone(3))
    series = count_fibers(sp, ed, (1, 1))
    assert series.coefficient((1, 1)) == 3
    assert series.coefficient((0, 0)) == 1

    series = count_fibers(worked_presentation, worked_essential, (11, 4))
    assert series.coefficient((11, 4)) == 1
    assert series.coefficient((0, 0)) == 1


def test_expand_matches_count_worked_example(worked_presentation, worked_essential):
    bound = (30, 12)
    counted = count_fibers(worked_presentation, worked_essential, bound)
    assert expand(PEJ2, bound).coeffs == counted.coeffs


def test_expand_matches_count_on_corpus(corpus):
    for _, cs in corpus[::2]:
        sp, ed, cr = pipeline(cs)
        bound = box_for(ed.p)
        assert expand(short_form(cr), bound).coeffs == count_fibers(sp, ed, bound).coeffs


def test_expand_matches_count_with_many_variables():
    # twelve codimension-two weights plus the origin group
    sp, ed, cr = pipeline(charseq(4, ("1/3", "1/3", "1/3", "1/3")))
    assert ed.s1 == 0
    assert ed.s2 == 12
    bound = box_for(ed.p)
    assert ed.p > 12
    assert expand(short_form(cr), bound).coeffs == count_fibers(sp, ed, bound).coeffs


def test_expand_stores_only_reachable_monomials():
    geometric = CyclotomicRational(vars=3, groups=(0, 0, 3), numerator=(), denominator=((1, 1, 1),))
    series = expand(geometric, (500, 500, 500), max_points=600)
    assert series.coeffs == {(k, k, k): 1 for k in range(501)}


def test_count_generated_matches_count_fibers(worked_presentation, worked_essential, corpus):
    cases = [(worked_presentation, worked_essential)]
    cases += [pipeline(cs)[:2] for _, cs in corpus[::25]]
    for sp, ed in cases:
        generators = [RationalVector.unit(j, sp.d) for j in range(sp.d)] + list(sp.gammas)
        bound = box_for(ed.p)
        assert count_generated(generators, ed.ws, bound).coeffs == count_fibers(sp, ed, bound).coeffs


def test_specialize_sum_examples():
    specialized = specialize_sum(PEJ2)
    assert specialized.numerator == ((135,),)
    assert specialized.denominator == ((1,), (3,), (4,), (15,))

    _, _, cr = pipeline(quadratic_cone(3))
    specialized = specialize_sum(cr)
    assert specialized.numerator == ((4,),)
    assert specialized.denominator == ((1,), (2,), (2,), (2,))

    _, _, cr = pipeline(quadratic_cone(2))
    assert specialize_sum(cr).numerator == cr.numerator
    assert specialize_sum(cr).denominator == cr.denominator


def test_weight_sum_series_is_sum_specialization(worked_presentation, worked_essential, corpus):
    cases = [(worked_presentation, worked_essential)]
    cases += [pipeline(cs)[:2] for _, cs in corpus]
    for sp, ed in cases:
        assert poincare_weights(sp, [ed.weight_sum()]) == specialize_sum(poincare_forward(sp, ed))


def test_compose_power():
    cr = CyclotomicRational(vars=1, groups=(0, 0, 1), numerator=(), denominator=((1,),))
    assert compose_power(cr, 4).denominator == ((4,),)
    with pytest.raises(NonIntegralPairing):
        compose_power(CyclotomicRational(vars=1, groups=(0, 0, 1), numerator=((3,),), denominator=()), Fraction(1, 2))


def test_no_cancellation_above_dimension_two(corpus):
    for _, cs in corpus:
        if cs.d == 2:
            continue
        sp, _, cr = pipeline(cs)
        assert cr.is_short
        assert len(cr.denominator) - len(cr.numerator) == sp.d


def test_indicator_multiplicities_match_prediction(corpus):
    for _, cs in corpus:
        if cs.d == 2:
            continue
        sp, ed, cr = pipeline(cs)
        observed = indicator_multiplicities(cr)
        predicted = predicted_indicator_multiplicities(sp, ed)
        assert observed['origin'] == predicted['origin']
        if ed.s2 == 1:
            assert observed['codim2_and_origin'] == predicted['codim2_and_origin']


def test_quadratic_cone_multiplicity_three():
    for d in (3, 4, 5):
        sp, ed, cr = pipeline(quadratic_cone(d))
        assert indicator_multiplicities(cr)['codim2_and_origin'] == 3
        assert indicator_multiplicities(cr)['origin'] == d - 2
        assert predicted_indicator_multiplicities(sp, ed)['codim2_and_origin'] == 3


def test_indicator_multiplicity_with_full_equisingular_dimension():
    # c = d, yet the origin indicator appears once through column c
    sp, ed, cr = pipeline(charseq(3, ("3/2", 1, "1/2")))
    assert sp.c == 3
    assert ed.groups == (2, 0, 1)
    assert indicator_multiplicities(cr)['origin'] == 1
    assert predicted_indicator_multiplicities(sp, ed)['origin'] == 1


def test_single_codim2_without_indicator_columns():
    sp, ed, cr = pipeline(charseq(3, ("3/2", "1/2", "1/2")))
    assert ed.groups == (1, 1, 3)
    assert indicator_multiplicities(cr)['codim2_and_origin'] == 0
    assert predicted_indicator_multiplicities(sp, ed)['codim2_and_origin'] == 0

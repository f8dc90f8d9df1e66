# tests/test_helpers.py

"""
Tests for document parsing helpers and coordinate ordering
"""

from fractions import Fraction

import pytest

from models.lattice_models import RationalVector
from utils.exceptions import MalformedDocument
from utils.helpers import lex_sorted, parse_bound, parse_rational


def rv(*coords):
    return RationalVector(tuple(Fraction(x) for x in coords))


def test_lex_sorted_orders_columns():
    lambdas = [[Fraction(0), Fraction(1, 2), Fraction(1, 3)], [Fraction(1), Fraction(1, 2), Fraction(1, 3)]]
    assert lex_sorted(lambdas, 3) == (rv("1/2", "1/3", 0), rv("1/2", "1/3", 1))


def test_lex_sorted_accepts_vectors():
    vectors = (rv(0, "1/3", "1/3"), rv(0, "1/3", "5/9"))
    assert lex_sorted(vectors, 3) == (rv("1/3", "1/3", 0), rv("5/9", "1/3", 0))


def test_parse_helpers():
    assert parse_rational("5/9") == Fraction(5, 9)
    assert parse_bound("12,5") == (12, 5)
    with pytest.raises(MalformedDocument):
        parse_rational("2/4")

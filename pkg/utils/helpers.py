# utils/helpers.py

"""
Helper functions for the quasi-ordinary toolkit
Strict rational parsing and formatting for documents and CLI flags, and
coordinate ordering of exponent lists
"""

import re
from fractions import Fraction
from math import gcd
from typing import Any, List, Sequence, Tuple

from models.lattice_models import RationalVector
from utils.exceptions import MalformedDocument

_RATIONAL = re.compile(r'^(-?\d+)(?:/(\d+))?$')


def parse_rational(value: Any) -> Fraction:
    """
    Parse "p/q" (q > 0, gcd(p, q) = 1) or a decimal integer

    Args:
        value: String, or an integer for convenience

    Returns:
        Fraction

    Raises:
        MalformedDocument on floats, non-reduced fractions or junk
    """
    if isinstance(value, bool):
        raise MalformedDocument(f"Expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise MalformedDocument(f"Expected a rational string, got {value!r}")

    match = _RATIONAL.match(value.strip())
    if not match:
        raise MalformedDocument(f"Not a rational: {value!r}")
    p = int(match.group(1))
    if match.group(2) is None:
        return Fraction(p)
    q = int(match.group(2))
    if q == 0:
        raise MalformedDocument(f"Zero denominator in {value!r}")
    if gcd(p, q) != 1:
        raise MalformedDocument(f"Fraction {value!r} is not reduced")
    return Fraction(p, q)


def format_rational(value: Fraction) -> str:
    """Canonical string: "p" for integers, "p/q" otherwise"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Sequence[Fraction]) -> List[str]:
    return [format_rational(x) for x in vector]


def parse_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedDocument(f"Field {name!r} must be an integer, got {value!r}")
    return value


def parse_exponent(value: Any, name: str) -> Tuple[int, ...]:
    """Integer array, e.g. [99, 36]"""
    if not isinstance(value, list):
        raise MalformedDocument(f"Field {name!r} must be an array of integers")
    return tuple(parse_int(x, name) for x in value)


def parse_bound(text: str) -> Tuple[int, ...]:
    """--bound a_1,...,a_p"""
    try:
        bound = tuple(int(part) for part in text.split(','))
    except ValueError:
        raise MalformedDocument(f"Bad --bound value {text!r}")
    if any(b < 0 for b in bound):
        raise MalformedDocument(f"Bounds must be nonnegative: {text!r}")
    return bound


def lex_sorted(vectors: Sequence[Sequence[Fraction]], d: int) -> Tuple[RationalVector, ...]:
    """Permute coordinates so the columns (v[i] over all vectors) decrease lexicographically"""
    order = sorted(range(d), key=lambda i: tuple(v[i] for v in vectors), reverse=True)
    return tuple(RationalVector(tuple(v[i] for i in order)) for v in vectors)

# utils/exceptions.py

"""
Error hierarchy for the quasi-ordinary toolkit
Every domain error carries the offending datum so the CLI can report it
"""

from fractions import Fraction
from typing import Any, Dict


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else str(value.numerator)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, 'coords'):
        return _jsonable(value.coords)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


class QuasiOrdinaryError(Exception):
    """Base class of every domain error"""

    def __init__(self, message: str, datum: Any = None):
        super().__init__(message)
        self.datum = datum

    @property
    def name(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict:
        return {
            'error': self.name,
            'detail': str(self),
            'datum': _jsonable(self.datum)
        }


class MalformedDocument(ValueError):
    """Input document could not be parsed"""


# lattice_core
class DimensionMismatch(QuasiOrdinaryError):
    pass


class NotASublattice(QuasiOrdinaryError):
    pass


class DegenerateLattice(QuasiOrdinaryError):
    pass


# charseq
class BadDimension(QuasiOrdinaryError):
    pass


class NegativeExponent(QuasiOrdinaryError):
    pass


class NotStrictlyIncreasing(QuasiOrdinaryError):
    pass


class LexOrderViolated(QuasiOrdinaryError):
    pass


class RedundantExponent(QuasiOrdinaryError):
    pass


class NoInteriorWeight(QuasiOrdinaryError):
    pass


# essential
class BlockStructureViolation(QuasiOrdinaryError):
    pass


# series
class NonIntegralPairing(QuasiOrdinaryError):
    pass


class DivergentAtOrigin(QuasiOrdinaryError):
    pass


class BoxTooLarge(QuasiOrdinaryError):
    pass


# inverse
class NoPairing(QuasiOrdinaryError):
    pass


class AmbiguousOrder(QuasiOrdinaryError):
    pass


class InconsistentSystem(QuasiOrdinaryError):
    pass


class NotNormalizable(QuasiOrdinaryError):
    pass


class UnknownShape(QuasiOrdinaryError):
    pass


# zeta
class InvalidBranchData(QuasiOrdinaryError):
    pass


class GroupMismatch(QuasiOrdinaryError):
    pass


# sampler
class SamplerExhausted(QuasiOrdinaryError):
    pass

# utils/codec.py

"""
JSON document codec
charseq, shortform and pair documents in and out; output is canonical
(fixed key order, compact separators) so identical input gives identical bytes
"""

import json
import logging
from typing import Any, Dict, Tuple

from config.settings import DocumentKind
from models.lattice_models import RationalVector
from models.qo_models import CharacteristicSequence
from models.series_models import CyclotomicRational, ShortFormInput
from utils.exceptions import MalformedDocument
from utils.helpers import format_vector, parse_exponent, parse_int, parse_rational

logger = logging.getLogger(__name__)


def loads(text: str) -> Dict[str, Any]:
    """Parse a document and check its kind"""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"Invalid JSON: {e}")
    if not isinstance(document, dict):
        raise MalformedDocument("Document must be a JSON object")
    kind = document.get('kind')
    if kind not in {k.value for k in DocumentKind}:
        raise MalformedDocument(f"Unknown document kind {kind!r}")
    return document


def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(document, separators=(',', ':'), ensure_ascii=False)


def expect_kind(document: Dict[str, Any], kind: DocumentKind):
    if document.get('kind') != kind.value:
        raise MalformedDocument(f"Expected a {kind.value} document, got {document.get('kind')!r}")


def charseq_from_dict(document: Dict[str, Any]) -> CharacteristicSequence:
    expect_kind(document, DocumentKind.CHARSEQ)
    d = parse_int(document.get('d'), 'd')
    lambdas = document.get('lambdas')
    if not isinstance(lambdas, list) or not all(isinstance(lam, list) for lam in lambdas):
        raise MalformedDocument("Field 'lambdas' must be an array of arrays")
    return CharacteristicSequence(d, tuple(RationalVector(tuple(parse_rational(x) for x in lam)) for lam in lambdas))


def charseq_to_dict(cs: CharacteristicSequence) -> Dict[str, Any]:
    return {
        'kind': DocumentKind.CHARSEQ.value,
        'd': cs.d,
        'lambdas': [format_vector(lam) for lam in cs.lambdas]
    }


def _groups_from_dict(value: Any) -> Tuple[int, int, int]:
    if not isinstance(value, dict):
        raise MalformedDocument("Field 'groups' must be an object {s1, s2, s0}")
    groups = tuple(parse_int(value.get(key), key) for key in ('s1', 's2', 's0'))
    if any(s < 0 for s in groups):
        raise MalformedDocument(f"Negative group size in {value}")
    return groups


def shortform_from_dict(document: Dict[str, Any]) -> ShortFormInput:
    """
    Surface series (|denominator| - |numerator| = 2) always use the
    two-group convention, so the flag is not part of the document
    """
    expect_kind(document, DocumentKind.SHORTFORM)
    variables = parse_int(document.get('vars'), 'vars')
    groups = _groups_from_dict(document.get('groups'))
    numerator = document.get('numerator')
    denominator = document.get('denominator')
    if not isinstance(numerator, list) or not isinstance(denominator, list):
        raise MalformedDocument("Fields 'numerator' and 'denominator' must be arrays")
    numerator = [parse_exponent(e, 'numerator') for e in numerator]
    denominator = [parse_exponent(e, 'denominator') for e in denominator]
    try:
        cr = CyclotomicRational(
            vars=variables,
            groups=groups,
            numerator=tuple(numerator),
            denominator=tuple(denominator),
            two_group_mode=len(denominator) - len(numerator) == 2
        )
    except ValueError as e:
        raise MalformedDocument(str(e))
    return ShortFormInput(cr)


def shortform_to_dict(cr: CyclotomicRational) -> Dict[str, Any]:
    s1, s2, s0 = cr.groups
    return {
        'kind': DocumentKind.SHORTFORM.value,
        'vars': cr.vars,
        'groups': {'s1': s1, 's2': s2, 's0': s0},
        'numerator': [list(e) for e in cr.numerator],
        'denominator': [list(e) for e in cr.denominator]
    }


def pair_from_dict(document: Dict[str, Any]) -> Tuple[ShortFormInput, ShortFormInput]:
    """{"kind":"pair","first":<shortform>,"second":<shortform>}"""
    expect_kind(document, DocumentKind.PAIR)
    first, second = document.get('first'), document.get('second')
    if not isinstance(first, dict) or not isinstance(second, dict):
        raise MalformedDocument("A pair document needs 'first' and 'second' shortform objects")
    return shortform_from_dict(first), shortform_from_dict(second)

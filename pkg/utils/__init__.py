# utils/__init__.py

from utils.logger import setup_logger, get_logger
from utils.exceptions import MalformedDocument, QuasiOrdinaryError
from utils.helpers import format_rational, parse_bound, parse_rational

__all__ = [
    'setup_logger',
    'get_logger',
    'MalformedDocument',
    'QuasiOrdinaryError',
    'format_rational',
    'parse_bound',
    'parse_rational'
]

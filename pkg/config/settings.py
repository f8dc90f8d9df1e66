# config/settings.py

"""
Basic settings and enumerations for the quasi-ordinary toolkit
"""

from enum import Enum
import os

import psutil
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class OutputFormat(Enum):
    """Output format of CLI documents"""
    JSON = "json"
    TEXT = "text"


class DocumentKind(Enum):
    """Kinds of input documents"""
    CHARSEQ = "charseq"
    SHORTFORM = "shortform"
    PAIR = "pair"


class CommandName(Enum):
    """CLI commands"""
    VALIDATE = "validate"
    INVARIANTS = "invariants"
    ESSENTIAL = "essential"
    POINCARE = "poincare"
    EXPAND = "expand"
    COUNT = "count"
    INVERT = "invert"
    ZETA = "zeta"
    EQUI = "equi"
    SAMPLE = "sample"


def _default_threads() -> int:
    return psutil.cpu_count(logical=True) or 1


# Engine Configuration
class EngineSettings:
    """Environment-backed engine settings"""
    THREADS = int(os.getenv('QOI_THREADS', str(_default_threads())))
    MAX_BOX_POINTS = int(os.getenv('QOI_MAX_BOX_POINTS', '2000000'))
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
    LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'false').lower() == 'true'


# Logging Configuration
class LogConfig:
    """Logging configuration"""
    LOG_DIR = 'logs'
    LOG_FILE_PREFIX = 'qoi'
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
    CONSOLE_FORMAT = '%(log_color)s%(asctime)s - %(levelname)s - %(message)s'


def validate_configuration():
    """Validate environment configuration"""
    errors = []

    if EngineSettings.THREADS < 1:
        errors.append("QOI_THREADS must be at least 1")

    if EngineSettings.MAX_BOX_POINTS < 1:
        errors.append("QOI_MAX_BOX_POINTS must be positive")

    if EngineSettings.LOG_LEVEL.upper() not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        errors.append(f"Unknown LOG_LEVEL {EngineSettings.LOG_LEVEL}")

    if errors:
        raise ValueError(f"Configuration errors: {', '.join(errors)}")

    return True


if __name__ == "__main__":
    print("Configuration Settings")
    print("=" * 60)
    print(f"Threads: {EngineSettings.THREADS}")
    print(f"Max box points: {EngineSettings.MAX_BOX_POINTS}")
    print(f"Log Level: {EngineSettings.LOG_LEVEL}")
    print("=" * 60)

    try:
        validate_configuration()
        print(" Configuration is valid")
    except ValueError as e:
        print(f" Configuration error: {e}")

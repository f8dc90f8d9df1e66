# config/engine_config.py

"""
Configuration for the quasi-ordinary computation engine
Defines worker limits, enumeration guards and sampler bounds
"""

import os
from dataclasses import dataclass

from config.settings import EngineSettings


@dataclass
class EngineConfig:
    """Computation engine configuration"""

    # Parallelism
    threads: int = EngineSettings.THREADS  # caps enumeration workers, never changes output

    # Enumeration guards
    max_box_points: int = EngineSettings.MAX_BOX_POINTS  # refuse expansions with larger boxes

    # Random-instance sampler
    max_dim: int = 4
    max_g: int = 3
    max_denominator: int = 6
    max_attempts: int = 5000

    # Logging
    log_level: str = EngineSettings.LOG_LEVEL
    log_to_file: bool = EngineSettings.LOG_TO_FILE


def get_default_engine_config() -> EngineConfig:
    """Get default engine configuration"""
    return EngineConfig()


def get_oracle_engine_config() -> EngineConfig:
    """Single-threaded configuration used by brute-force oracles"""
    return EngineConfig(
        threads=1,
        max_box_points=500000,
        max_dim=4,
        max_g=3,
        max_denominator=6
    )


def validate_engine_config(config: EngineConfig) -> dict:
    """Validate engine configuration parameters"""
    validation = {
        'valid': True,
        'errors': [],
        'warnings': []
    }

    if config.threads < 1:
        validation['errors'].append("Thread count must be at least 1")
        validation['valid'] = False

    if config.threads > 64:
        validation['warnings'].append("Thread count above 64 brings no benefit for desk-scale boxes")

    if config.max_box_points < 1:
        validation['errors'].append("Box point limit must be positive")
        validation['valid'] = False

    if config.max_dim < 2:
        validation['errors'].append("Sampler dimension must be at least 2")
        validation['valid'] = False

    if config.max_g < 1:
        validation['errors'].append("Sampler must allow at least one characteristic exponent")
        validation['valid'] = False

    if config.max_denominator < 2:
        validation['errors'].append("Sampler denominators must allow at least 2")
        validation['valid'] = False

    if config.max_dim > 5 or config.max_denominator > 9:
        validation['warnings'].append("Large sampler limits make oracle boxes slow")

    if config.max_attempts < 100:
        validation['warnings'].append("Few sampler attempts; rare branches may be exhausted")

    return validation


# Load configuration from environment variables
def load_engine_config_from_env() -> EngineConfig:
    """Load engine configuration from environment variables"""
    return EngineConfig(
        threads=int(os.environ.get('QOI_THREADS', EngineSettings.THREADS)),
        max_box_points=int(os.environ.get('QOI_MAX_BOX_POINTS', EngineSettings.MAX_BOX_POINTS)),
        max_dim=int(os.environ.get('QOI_SAMPLER_MAX_DIM', 4)),
        max_g=int(os.environ.get('QOI_SAMPLER_MAX_G', 3)),
        max_denominator=int(os.environ.get('QOI_SAMPLER_MAX_DENOMINATOR', 6)),
        log_level=os.environ.get('LOG_LEVEL', EngineSettings.LOG_LEVEL),
        log_to_file=os.environ.get('LOG_TO_FILE', 'false').lower() == 'true'
    )

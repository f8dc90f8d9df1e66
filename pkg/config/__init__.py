# config/__init__.py

from config.settings import CommandName, DocumentKind, EngineSettings, LogConfig, OutputFormat
from config.engine_config import (
    EngineConfig,
    get_default_engine_config,
    get_oracle_engine_config,
    load_engine_config_from_env,
    validate_engine_config
)

__all__ = [
    'CommandName',
    'DocumentKind',
    'EngineSettings',
    'LogConfig',
    'OutputFormat',
    'EngineConfig',
    'get_default_engine_config',
    'get_oracle_engine_config',
    'load_engine_config_from_env',
    'validate_engine_config'
]

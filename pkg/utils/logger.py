# utils/logger.py

"""
Logging configuration for the quasi-ordinary toolkit
Diagnostics go to stderr so stdout stays reserved for documents
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

import colorlog

from config.settings import EngineSettings, LogConfig


def setup_logger(name: str = 'qoi', log_to_file: bool = False, level: Optional[str] = None):
    """
    Setup logger with a colored stderr handler and an optional file handler

    Args:
        name: Logger name; the empty string configures the root logger
        log_to_file: Whether to log to file
        level: Level name, defaults to LOG_LEVEL from the environment

    Returns:
        Logger instance
    """
    logger = logging.getLogger(name or None)
    logger.setLevel(getattr(logging, (level or EngineSettings.LOG_LEVEL).upper(), logging.WARNING))

    # Remove existing handlers
    logger.handlers = []

    console_formatter = colorlog.ColoredFormatter(
        LogConfig.CONSOLE_FORMAT,
        datefmt='%H:%M:%S',
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red,bg_white',
        }
    )
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    logger.addHandler(console_handler)

    if log_to_file or EngineSettings.LOG_TO_FILE:
        log_dir = Path(LogConfig.LOG_DIR)
        log_dir.mkdir(exist_ok=True)

        log_file = log_dir / f"{LogConfig.LOG_FILE_PREFIX}_{datetime.now().strftime('%Y%m%d')}.log"

        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(LogConfig.LOG_FORMAT, datefmt=LogConfig.LOG_DATE_FORMAT))
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str):
    """Get logger by name"""
    return logging.getLogger(name)

"""Core: configuration, logging and errors."""

from .config import (
    FORMAT_VERSION,
    LOG_FILE,
    DATA_DIR,
    DEFAULT_MAX_GENUS,
    DEFAULT_MAX_HOLES,
    Z_DIRECTION,
    LAMBDA_SIGN_CONVENTION,
    RunConfig,
    get_thread_count,
    load_environment,
)
from .logging_config import logger, setup_logging, enable_debug_console
from .errors import *  # noqa: F401,F403
from . import errors

__all__ = [
    'FORMAT_VERSION', 'LOG_FILE', 'DATA_DIR', 'DEFAULT_MAX_GENUS', 'DEFAULT_MAX_HOLES',
    'Z_DIRECTION', 'LAMBDA_SIGN_CONVENTION', 'RunConfig', 'get_thread_count',
    'load_environment', 'logger', 'setup_logging', 'enable_debug_console', 'errors',
]

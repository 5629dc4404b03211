"""
Shared error types, logging setup and analysis configuration.
"""

from src.utils.error_handler import ErrorHandler, EmovecError, get_logger, setup_logging
from src.utils.settings import AnalysisConfig, DEFAULT_CONFIG, resolve_jobs

__all__ = [
    "ErrorHandler",
    "EmovecError",
    "get_logger",
    "setup_logging",
    "AnalysisConfig",
    "DEFAULT_CONFIG",
    "resolve_jobs",
]

"""
Utilities module for drgq.
"""

from .logging import StructuredLogger, get_logger, reset_logger
from .config import Config, get_config, reset_config, resolve_path
from .data import CatalogEntry, CatalogLoader

__all__ = [
    'StructuredLogger',
    'get_logger',
    'reset_logger',
    'Config',
    'get_config',
    'reset_config',
    'resolve_path',
    'CatalogEntry',
    'CatalogLoader',
]

"""
Workbench utilities package.

This package provides default constants, logging helpers, metrics
collection and the exception hierarchy shared by every algebra module.
"""

from .config import (
    DEFAULT_TRUNC_BOXES,
    DEFAULT_TRUNC_DET,
    FORM_CACHE_SIZE,
    EXTREMAL_BFS_FACTOR,
    ORACLE_MAX_BOXES,
)
from .errors import (
    WorkbenchError,
    DomainError,
    UnsupportedTypeError,
    SizeGuardError,
    LetterInvalidError,
    NotComputableError,
    InconclusiveError,
    NonIntegralTransitionError,
    ExtremalSearchOverflow,
)
from .metrics import get_metrics

__all__ = [
    'DEFAULT_TRUNC_BOXES',
    'DEFAULT_TRUNC_DET',
    'FORM_CACHE_SIZE',
    'EXTREMAL_BFS_FACTOR',
    'ORACLE_MAX_BOXES',
    'WorkbenchError',
    'DomainError',
    'UnsupportedTypeError',
    'SizeGuardError',
    'LetterInvalidError',
    'NotComputableError',
    'InconclusiveError',
    'NonIntegralTransitionError',
    'ExtremalSearchOverflow',
    'get_metrics',
]

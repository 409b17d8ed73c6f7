"""
Logging helpers for long-running algebraic computations.

Provides a call-timing decorator and a small collection of structured
log lines for enumerations, cache statistics and cell computations.
"""
import logging
import time
from functools import wraps
from typing import Any, Callable, Dict

from .metrics import get_metrics

# Configure module logger
logger = logging.getLogger(__name__)


def log_method_call(log_args: bool = False):
    """
    Decorator for logging method calls.

    Args:
        log_args: Whether to log keyword arguments

    Returns:
        Decorator function
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.time()
            name = func.__qualname__

            if log_args:
                logger.debug(f"{name} called with kwargs: {kwargs}")
            else:
                logger.debug(f"{name} called")

            try:
                result = func(*args, **kwargs)
                execution_time = time.time() - start_time

                if execution_time > 0.1:
                    logger.debug(f"{name} execution time: {execution_time:.3f}s")
                    get_metrics().record_timing(func.__name__, execution_time)

                return result
            except Exception as e:
                logger.error(f"Error in {name}: {e}")
                raise

        return wrapper
    return decorator


def log_enumeration_stats(stats: Dict[str, Any]) -> None:
    """
    Log the outcome of an enumeration in a structured format.

    Args:
        stats: Dictionary with 'what', 'count', 'time' and optional 'truncated'
    """
    what = stats.get('what', 'items')
    count = stats.get('count', 0)
    elapsed = stats.get('time', 0.0)
    message = f"Enumerated {count} {what} in {elapsed:.2f}s"

    if stats.get('truncated', False):
        logger.warning(message + " [TRUNCATED]")
    else:
        logger.info(message)


class ComputationLogger:
    """Utility class for logging computation summaries."""

    @staticmethod
    def log_form_cache_stats(hits: int, misses: int) -> None:
        """
        Log form memo performance.

        Args:
            hits: Number of memo hits
            misses: Number of memo misses
        """
        total = hits + misses
        if total > 0:
            hit_rate = (hits / total) * 100
            logger.info(f"Form memo: {hits} hits, {misses} misses ({hit_rate:.1f}% hit rate)")

    @staticmethod
    def log_cell_summary(lam, left: int, right: int, two_sided: int, status: str) -> None:
        """
        Log a cell-partition result.

        Args:
            lam: Dominant weight the cells belong to
            left: Number of left cells
            right: Number of right cells
            two_sided: Number of two-sided cells
            status: 'conclusive' or 'inconclusive'
        """
        line = f"Cells for lambda={list(lam)}: {left} left, {right} right, {two_sided} two-sided ({status})"
        if status == 'conclusive':
            logger.info(line)
        else:
            logger.warning(line)

    @staticmethod
    def log_bicrystal_drift(i: int, op: str, drift: int) -> None:
        """
        Log a determinant drift picked up by a bicrystal operator.

        Args:
            i: Operator index
            op: Operator name
            drift: Determinant power added to the representation slot
        """
        if drift:
            logger.debug(f"Bicrystal {op}_{i}: determinant drift {drift:+d}")

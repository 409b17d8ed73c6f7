"""
Metrics collection for algebraic computations.

Tracks form-memo hit rates and timings of slow operations so that the
command-line driver can report where time went.
"""
import logging
import threading
from typing import Any, Dict, Optional

# Set up logging
logger = logging.getLogger(__name__)


class PerformanceMetrics:
    """Track and store performance metrics for the workbench."""

    def __init__(self):
        """Initialize the performance metrics tracker."""
        self.metrics = {
            'cache_stats': {'hits': 0, 'misses': 0},
            'timings': {},
            'error_counts': {'total': 0, 'by_type': {}},
        }
        self.lock = threading.Lock()

    def record_cache_event(self, hit: bool) -> None:
        """
        Record a memo hit or miss event.

        Args:
            hit: True if memo hit, False if memo miss
        """
        with self.lock:
            if hit:
                self.metrics['cache_stats']['hits'] += 1
            else:
                self.metrics['cache_stats']['misses'] += 1

    def record_timing(self, operation: str, elapsed_seconds: float) -> None:
        """
        Record the duration of an operation.

        Args:
            operation: Operation name
            elapsed_seconds: Time taken in seconds
        """
        with self.lock:
            samples = self.metrics['timings'].setdefault(operation, [])
            # Keep only the last 100 measurements
            samples.append(elapsed_seconds)
            if len(samples) > 100:
                samples.pop(0)

    def record_error(self, error_type: str) -> None:
        """
        Record an error event.

        Args:
            error_type: Type of error that occurred
        """
        with self.lock:
            self.metrics['error_counts']['total'] += 1
            by_type = self.metrics['error_counts']['by_type']
            by_type[error_type] = by_type.get(error_type, 0) + 1

    def get_summary(self) -> Dict[str, Any]:
        """
        Get a summary of current performance metrics.

        Returns:
            Dictionary containing performance metric summary
        """
        with self.lock:
            hits = self.metrics['cache_stats']['hits']
            misses = self.metrics['cache_stats']['misses']
            total = hits + misses
            averages = {
                name: sum(samples) / len(samples)
                for name, samples in self.metrics['timings'].items() if samples
            }
            return {
                'cache_hits': hits,
                'cache_misses': misses,
                'cache_hit_rate': hits / total if total else 0.0,
                'average_timings': averages,
                'errors': dict(self.metrics['error_counts']['by_type']),
            }

    def reset(self) -> None:
        """Clear all collected metrics."""
        with self.lock:
            self.metrics['cache_stats'] = {'hits': 0, 'misses': 0}
            self.metrics['timings'] = {}
            self.metrics['error_counts'] = {'total': 0, 'by_type': {}}


# Global metrics instance
_metrics_instance: Optional[PerformanceMetrics] = None
_metrics_lock = threading.Lock()


def get_metrics() -> PerformanceMetrics:
    """
    Get the global performance metrics instance.

    Returns:
        PerformanceMetrics: Shared metrics tracker
    """
    global _metrics_instance
    if _metrics_instance is None:
        with _metrics_lock:
            if _metrics_instance is None:
                _metrics_instance = PerformanceMetrics()
    return _metrics_instance

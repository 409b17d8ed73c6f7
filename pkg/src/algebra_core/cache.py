"""
Memo tables for expensive recursive computations.

The bilinear form on the free algebra is computed by a recursion over word
pairs that is exponential without memoization; the table below is shared
between threads and bounded in size.
"""
import logging
import threading
from collections import OrderedDict
from typing import Callable, Generic, Optional, TypeVar

from ..workbench_utils.config import FORM_CACHE_SIZE
from ..workbench_utils.metrics import get_metrics

# Set up logging
logger = logging.getLogger(__name__)

# Define generic type variables for cache keys and values
K = TypeVar('K')
V = TypeVar('V')


class MemoCache(Generic[K, V]):
    """
    Thread-safe bounded memo table.

    Entries are evicted least-recently-used first once max_size is reached.
    Hits and misses are reported to the global metrics tracker.
    """

    def __init__(self, max_size: int = FORM_CACHE_SIZE, name: str = "memo"):
        """
        Initialize the memo table.

        Args:
            max_size: Maximum number of entries to keep
            name: Label used in log lines
        """
        self.max_size = max_size
        self.name = name
        self.cache: "OrderedDict[K, V]" = OrderedDict()
        self.lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: K) -> Optional[V]:
        """
        Get a stored value.

        Args:
            key: Memo key

        Returns:
            Stored value or None if absent
        """
        with self.lock:
            if key in self.cache:
                self.cache.move_to_end(key)
                self.hits += 1
                get_metrics().record_cache_event(True)
                return self.cache[key]
            self.misses += 1
            get_metrics().record_cache_event(False)
            return None

    def set(self, key: K, value: V) -> None:
        """
        Store a value, evicting the least recently used entry if full.

        Args:
            key: Memo key
            value: Value to store
        """
        with self.lock:
            if key not in self.cache and len(self.cache) >= self.max_size:
                self.cache.popitem(last=False)
            self.cache[key] = value

    def get_or_compute(self, key: K, compute: Callable[[], V]) -> V:
        """
        Return the stored value for key, computing and storing it if absent.

        The computation runs outside the lock so recursive calls may use the
        same table.
        """
        value = self.get(key)
        if value is None:
            value = compute()
            self.set(key, value)
        return value

    def resize(self, max_size: int) -> None:
        """
        Change the bound, evicting least recently used entries if needed.

        Args:
            max_size: New maximum number of entries
        """
        with self.lock:
            self.max_size = max_size
            while len(self.cache) > max_size:
                self.cache.popitem(last=False)

    def clear(self) -> None:
        """Clear all entries."""
        with self.lock:
            if self.cache:
                logger.debug(f"Clearing {len(self.cache)} entries from {self.name}")
            self.cache.clear()

    def __len__(self) -> int:
        with self.lock:
            return len(self.cache)

# app/timing_util.py

import functools
import logging
import time
from typing import Any, Callable, Tuple

logger = logging.getLogger(__name__)


def log_duration(threshold_seconds: float):
    """
    Decorator that warns when a call runs longer than expected.

    Args:
        threshold_seconds: Duration above which a warning is logged

    Returns:
        Decorated function, results unchanged
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                if elapsed > threshold_seconds:
                    logger.warning(f"{func.__name__} took {elapsed:.2f}s (threshold {threshold_seconds}s)")
        return wrapper
    return decorator


def measure(func: Callable, *args, **kwargs) -> Tuple[Any, float]:
    """Run ``func`` once and return ``(result, wall seconds)``."""
    start = time.perf_counter()
    result = func(*args, **kwargs)
    return result, time.perf_counter() - start

"""
Operation Tracing

Decorator that records how long heavy computations take and whether they
failed. Records go through the standard logging tree under "workbench.trace".
"""

import logging
import time
from functools import wraps
from typing import Any, Callable, Dict, List, Optional

trace_logger = logging.getLogger("workbench.trace")


class TraceRecorder:
    """Keeps the most recent trace entries in memory for the scorecard."""

    def __init__(self, max_entries: int = 200):
        self.max_entries = max_entries
        self._entries: List[Dict[str, Any]] = []

    def record(self, action: str, category: str, seconds: float, success: bool) -> None:
        self._entries.append({
            "action": action,
            "category": category,
            "seconds": round(seconds, 4),
            "success": success,
        })
        if len(self._entries) > self.max_entries:
            self._entries.pop(0)

    def entries(self, category: Optional[str] = None) -> List[Dict[str, Any]]:
        if category is None:
            return list(self._entries)
        return [e for e in self._entries if e["category"] == category]

    def clear(self) -> None:
        self._entries.clear()


_recorder: Optional[TraceRecorder] = None


def get_trace_recorder() -> TraceRecorder:
    """Get or create the global trace recorder"""
    global _recorder
    if _recorder is None:
        _recorder = TraceRecorder()
    return _recorder


def traced(category: str, action_name: Optional[str] = None):
    """
    Decorator to time a computation and log its outcome

    Usage:
        @traced("homology")
        def homology(...):
            ...
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            action = action_name or func.__name__
            start = time.perf_counter()
            trace_logger.debug(f"{category}:{action} started")
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start
                get_trace_recorder().record(action, category, elapsed, success=False)
                trace_logger.warning(f"{category}:{action} failed after {elapsed:.3f}s: {e}")
                raise
            elapsed = time.perf_counter() - start
            get_trace_recorder().record(action, category, elapsed, success=True)
            trace_logger.debug(f"{category}:{action} finished in {elapsed:.3f}s")
            return result
        return wrapper
    return decorator

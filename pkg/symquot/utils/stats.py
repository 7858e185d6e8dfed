"""Request-scoped computation counters.

Usage in a command:
    from symquot.utils.stats import add_stat, get_stats, reset_stats

    reset_stats()
    ... run Gröbner bases, enumerations ...
    totals = get_stats()   # {"groebner_runs": ..., "groebner_seconds": ..., ...}

Each expensive routine calls ``add_stat(name, amount)`` when it finishes.
The accumulator is a plain dict guarded by a lock so worker threads write
to the same object.
"""

from __future__ import annotations

import threading
import time
from contextlib import contextmanager
from typing import Any, Iterator

_accumulator: dict[str, float] = {}
_lock = threading.Lock()


def reset_stats() -> None:
    """Clear all counters for the current command."""
    with _lock:
        _accumulator.clear()


def add_stat(name: str, amount: float = 1) -> None:
    with _lock:
        _accumulator[name] = _accumulator.get(name, 0) + amount


@contextmanager
def timed(name: str) -> Iterator[None]:
    """Count one run of *name* and accumulate its wall time under ``<name>_seconds``."""
    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed = time.perf_counter() - start
        with _lock:
            _accumulator[f"{name}_runs"] = _accumulator.get(f"{name}_runs", 0) + 1
            _accumulator[f"{name}_seconds"] = _accumulator.get(f"{name}_seconds", 0.0) + elapsed


def get_stats() -> dict[str, Any]:
    """Return accumulated counters, with times rounded for reporting."""
    with _lock:
        snapshot = dict(_accumulator)
    return {
        key: round(value, 4) if key.endswith("_seconds") else int(value)
        for key, value in sorted(snapshot.items())
    }

"""Caching helpers.

Goal:
- Avoid recomputing exact values that formulas and sweeps ask for again and again
  (factorials, refined counts, enumerated R(lambda, j) values).

Important:
- Caches are per-process.
- Everything cached here is a pure function of its arguments, so caching never changes results.
"""

from __future__ import annotations

import functools
import threading
from typing import Any, Callable, List


def cache_data(maxsize: int | None = 4096) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Small wrapper around functools.lru_cache for pure exact-value functions."""

    def _decorator(fn: Callable[..., Any]) -> Callable[..., Any]:
        return functools.lru_cache(maxsize=maxsize)(fn)

    return _decorator


class FactorialTable:
    """Grow-only table of exact factorials shared by all formula evaluators."""

    def __init__(self) -> None:
        self._values: List[int] = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("Factorial of a negative number is undefined.")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                values.append(values[-1] * len(values))
            return values[n]


factorial = FactorialTable()

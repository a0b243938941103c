"""Runtime limits guarding the exponential code paths.

Defaults are desk-scale; each can be raised per-process with an environment
variable or per-call with an explicit argument where a function accepts one.
"""

from __future__ import annotations

import os

DEFAULT_MAX_ELEMENTS = 6
DEFAULT_MAX_K = 16
DEFAULT_BUDGET = 10_000_000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def max_elements() -> int:
    return _env_int("PMKIT_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS)


def max_k() -> int:
    return _env_int("PMKIT_MAX_K", DEFAULT_MAX_K)


def search_budget() -> int:
    return _env_int("PMKIT_BUDGET", DEFAULT_BUDGET)

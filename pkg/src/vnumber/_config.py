"""Search-size caps, overridable through environment variables.

``VNUMBER_MAX_VERTICES``  largest graph accepted by exponential graph searches (default 24).
``VNUMBER_MAX_VARS``      largest variable count for Betti tables after polarization (default 20).
"""

from __future__ import annotations

import os

DEFAULT_MAX_VERTICES = 24
DEFAULT_MAX_VARS = 20


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_vertices() -> int:
    return _env_int("VNUMBER_MAX_VERTICES", DEFAULT_MAX_VERTICES)


def max_vars() -> int:
    return _env_int("VNUMBER_MAX_VARS", DEFAULT_MAX_VARS)

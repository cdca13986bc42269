"""Token-level predicates shared by type inference and the pattern census.

Matching is deliberately ASCII-strict: ``int()``/``float()`` accept
underscores, unicode digits, and inf/nan, none of which should type a CSV
column as numeric. Values whose magnitude overflows float64 are also
rejected; they cannot be profiled (or serialized) as numbers.
"""

from __future__ import annotations

import math
import re

BOOLEAN_TOKENS = frozenset({"true", "false", "t", "f", "yes", "no", "y", "n"})

_INT = re.compile(r"[+-]?[0-9]+")
_FLOAT = re.compile(
    r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?"
)
# 1,234 or -12,345.67: thousands groups of exactly three digits
_GROUPED = re.compile(r"[+-]?[0-9]{1,3}(?:,[0-9]{3})+(?:\.[0-9]+)?")


def _fits_float64(token: str) -> bool:
    try:
        return math.isfinite(float(token))
    except ValueError:  # pragma: no cover - regex already vetted the shape
        return False


def is_integer_token(token: str) -> bool:
    return _INT.fullmatch(token) is not None and _fits_float64(token)


def is_float_token(token: str) -> bool:
    return _FLOAT.fullmatch(token) is not None and _fits_float64(token)


def is_grouped_number_token(token: str) -> bool:
    return _GROUPED.fullmatch(token) is not None

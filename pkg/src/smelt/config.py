"""Scan configuration: every tunable threshold, lexicon, and switch.

Precedence when resolving an effective config is defaults < config file
< command-line overrides. The config file is a JSON object whose keys
mirror the ScanConfig field names; unknown keys are rejected so typos
fail loudly instead of being ignored.
"""

from __future__ import annotations

import dataclasses
import json
import re
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

from .catalogue import SMELL_KEYS

SEVERITIES = ("error", "warning", "info")


class ConfigError(ValueError):
    """Invalid config file or override; maps to exit status 2."""


def _fs(*items: str) -> frozenset[str]:
    return frozenset(items)


@dataclass(frozen=True)
class ScanConfig:
    # |r| cutoff and minimum paired observations for red-corr
    corr_threshold: float = 0.8
    corr_min_pairs: int = 30
    # red-uid gates
    uid_min_rows: int = 10
    uid_name_pattern: str = (
        r"(?i)(?:^|[^a-z0-9])(?:id|uid|key|index)(?:$|[^a-z0-9])|(?:id|uid|key|index)$"
    )
    # cat-bin distinct-count gate
    high_cardinality_threshold: int = 20
    # misc-balance: minority share must stay above this fraction of the
    # uniform share (1/k) to pass
    imbalance_ratio: float = 0.10
    target_name_pattern: str = (
        r"(?i)(?:^|[^a-z0-9])(?:class|label|target|outcome|churn)(?:$|[^a-z0-9])"
    )
    # miss-null / miss-bin fraction gates
    missing_fraction_threshold: float = 0.25
    binary_missing_fraction: float = 0.50
    positive_response_lexicon: frozenset[str] = field(
        default=_fs("y", "yes", "t", "true", "1")
    )
    # miss-sp-val
    sentinel_string_lexicon: frozenset[str] = field(
        default=_fs(
            "?", "-", "--", ".", "null", "nil", "none", "n/a", "na",
            "unknown", "missing", "undefined",
        )
    )
    sentinel_number_pattern: str = r"[+-]?(?:9{3,}|6{3,})"
    sentinel_min_fraction: float = 0.01
    # name lexicons for the name-based detectors
    sensitive_lexicon: frozenset[str] = field(
        default=_fs(
            "sex", "gender", "race", "ethnicity", "religion", "nationality",
            "native country", "age", "disability", "marital status",
            "pregnancy", "sexual orientation",
        )
    )
    quantity_lexicon: frozenset[str] = field(
        default=_fs(
            "radius", "perimeter", "area", "length", "width", "height",
            "weight", "mass", "duration", "distance", "depth", "volume",
            "temperature", "price", "salary", "income", "speed",
        )
    )
    unit_token_lexicon: frozenset[str] = field(
        default=_fs(
            "mm", "cm", "m", "km", "in", "ft", "g", "kg", "lb", "s", "sec",
            "min", "h", "hr", "ms", "usd", "eur", "gbp", "$", "%", "°c",
            "°f", "k",
        )
    )
    # str-num / str-human pattern coverage gate
    str_pattern_fraction: float = 0.95
    # most-frequent values retained per column profile
    top_values_k: int = 20
    disabled_smells: frozenset[str] = frozenset()
    severity_overrides: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for name in (
            "corr_threshold", "imbalance_ratio", "missing_fraction_threshold",
            "binary_missing_fraction", "sentinel_min_fraction",
            "str_pattern_fraction",
        ):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigError(f"{name} must be in [0, 1], got {v!r}")
        for name in ("corr_min_pairs", "uid_min_rows",
                     "high_cardinality_threshold", "top_values_k"):
            v = getattr(self, name)
            if v <= 0:
                raise ConfigError(f"{name} must be positive, got {v!r}")
        for name in ("positive_response_lexicon", "sentinel_string_lexicon",
                     "sensitive_lexicon", "quantity_lexicon",
                     "unit_token_lexicon"):
            if not getattr(self, name):
                raise ConfigError(f"{name} must not be empty")
        for name in ("uid_name_pattern", "target_name_pattern",
                     "sentinel_number_pattern"):
            try:
                re.compile(getattr(self, name))
            except re.error as exc:
                raise ConfigError(f"{name} is not a valid regex: {exc}") from exc
        for key in self.disabled_smells:
            if key not in SMELL_KEYS:
                raise ConfigError(f"disabled_smells contains unknown smell key {key!r}")
        for key, sev in self.severity_overrides.items():
            if key not in SMELL_KEYS:
                raise ConfigError(f"severity_overrides contains unknown smell key {key!r}")
            if sev not in SEVERITIES:
                raise ConfigError(
                    f"severity_overrides[{key!r}] must be one of {SEVERITIES}, got {sev!r}"
                )

    def enabled(self, key: str) -> bool:
        return key not in self.disabled_smells

    def as_dict(self) -> dict[str, Any]:
        """JSON-ready mapping; set-valued fields become sorted lists."""
        out: dict[str, Any] = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, frozenset):
                out[f.name] = sorted(v)
            elif isinstance(v, dict):
                out[f.name] = dict(sorted(v.items()))
            else:
                out[f.name] = v
        return out


_FIELDS = {f.name: f for f in fields(ScanConfig)}


def _coerce(name: str, value: Any) -> Any:
    """Coerce a raw JSON or command-line value into the field's type."""
    f = _FIELDS[name]
    default = f.default if f.default is not dataclasses.MISSING else f.default_factory()  # type: ignore[misc]
    try:
        if isinstance(default, bool):  # none today; guard ordering vs int
            return bool(value)
        if isinstance(default, float):
            return float(value)
        if isinstance(default, int):
            if isinstance(value, float) and not value.is_integer():
                raise ValueError("expected an integer")
            return int(value)
        if isinstance(default, frozenset):
            if isinstance(value, str):
                value = [t for t in (p.strip() for p in value.split(",")) if t]
            return frozenset(str(v) for v in value)
        if isinstance(default, dict):
            if isinstance(value, str):
                value = json.loads(value)
            if not isinstance(value, dict):
                raise ValueError("expected a JSON object")
            return {str(k): str(v) for k, v in value.items()}
        return str(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad value for config field {name!r}: {exc}") from exc


def _apply(base: dict[str, Any], updates: dict[str, Any], origin: str) -> None:
    for name, value in updates.items():
        if name not in _FIELDS:
            raise ConfigError(f"unknown config field {name!r} in {origin}")
        base[name] = _coerce(name, value)


def load_config(
    path: str | Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> ScanConfig:
    """Resolve the effective ScanConfig.

    ``path`` names an optional JSON config file; ``overrides`` holds
    already-split command-line ``key=value`` pairs, which win over the file.
    """
    values: dict[str, Any] = {}
    if path is not None:
        try:
            raw = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise ConfigError(f"config file {path} must contain a JSON object")
        _apply(values, doc, f"config file {path}")
    if overrides:
        _apply(values, overrides, "command-line overrides")
    return ScanConfig(**values)


def parse_set_option(pairs: list[str]) -> dict[str, str]:
    """Split repeated ``--set key=value`` arguments."""
    out: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ConfigError(f"--set expects key=value, got {pair!r}")
        out[key.strip()] = value
    return out

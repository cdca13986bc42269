"""Report rendering: deterministic text, canonical JSON, exit status.

The JSON form is canonical so CI diffs and snapshot tests stay stable:
keys sorted, no insignificant whitespace, floats at 12 significant digits,
UTF-8, and a schema marker ("smelt/1"). Text output carries no timestamps
or absolute paths for the same reason.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from ._version import __version__
from .catalogue import GROUP_NAMES, GROUP_ORDER, list_smells
from .config import ScanConfig
from .detectors import Finding
from .profiler import ColumnProfile, TableProfile

SCHEMA_ID = "smelt/1"

_SEVERITY_RANK = {"info": 0, "warning": 1, "error": 2}

EXIT_CLEAN = 0
EXIT_FINDINGS = 1
EXIT_ERROR = 2


@dataclass(frozen=True)
class ScanReport:
    tool_version: str
    source_name: str
    row_count: int
    column_count: int
    warnings: tuple[str, ...]
    findings: tuple[Finding, ...]
    config: ScanConfig

    def counts_by_key(self) -> dict[str, int]:
        counts = {d.key: 0 for d in list_smells()}
        for f in self.findings:
            counts[f.smell_key] += 1
        return counts

    def counts_by_group(self) -> dict[str, int]:
        counts = {g: 0 for g in GROUP_ORDER}
        for f in self.findings:
            counts[f.group] += 1
        return counts


def build_report(
    profile: TableProfile, findings: list[Finding], cfg: ScanConfig
) -> ScanReport:
    return ScanReport(
        tool_version=__version__,
        source_name=profile.source_name,
        row_count=profile.row_count,
        column_count=profile.column_count,
        warnings=profile.warnings,
        findings=tuple(findings),
        config=cfg,
    )


# --- canonical JSON ---------------------------------------------------


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"non-finite float {value!r} cannot be serialized")
    token = format(value, "#.12g")
    # '#.12g' keeps a bare trailing dot for 12-digit integral values
    return token[:-1] if token.endswith(".") else token


def _write_canonical(value, parts: list[str]) -> None:
    if value is None:
        parts.append("null")
    elif value is True:
        parts.append("true")
    elif value is False:
        parts.append("false")
    elif isinstance(value, str):
        parts.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, int):
        parts.append(str(value))
    elif isinstance(value, float):
        parts.append(_format_float(value))
    elif isinstance(value, dict):
        parts.append("{")
        for n, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            if n:
                parts.append(",")
            parts.append(json.dumps(key, ensure_ascii=False))
            parts.append(":")
            _write_canonical(value[key], parts)
        parts.append("}")
    elif isinstance(value, (list, tuple)):
        parts.append("[")
        for n, item in enumerate(value):
            if n:
                parts.append(",")
            _write_canonical(item, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__} to JSON")


def canonical_json(value) -> bytes:
    parts: list[str] = []
    _write_canonical(value, parts)
    return "".join(parts).encode("utf-8")


# --- JSON shapes ------------------------------------------------------


def finding_as_dict(f: Finding) -> dict:
    return {
        "key": f.smell_key,
        "group": f.group,
        "columns": list(f.columns),
        "severity": f.severity,
        "confidence": f.confidence,
        "evidence": f.evidence,
        "message": f.message,
        "suggestion": f.suggestion,
    }


def report_as_dict(report: ScanReport) -> dict:
    return {
        "schema": SCHEMA_ID,
        "tool_version": report.tool_version,
        "source": report.source_name,
        "rows": report.row_count,
        "columns": report.column_count,
        "warnings": list(report.warnings),
        "summary": {
            "groups": report.counts_by_group(),
            "keys": report.counts_by_key(),
        },
        "findings": [finding_as_dict(f) for f in report.findings],
        "config": report.config.as_dict(),
    }


def _column_as_dict(col: ColumnProfile) -> dict:
    numeric = None
    if col.numeric is not None:
        numeric = {
            "min": col.numeric.minimum,
            "max": col.numeric.maximum,
            "mean": col.numeric.mean,
            "stddev": col.numeric.stddev,
            "q1": col.numeric.q1,
            "q2": col.numeric.q2,
            "q3": col.numeric.q3,
        }
    strings = None
    if col.strings is not None:
        strings = {
            "whitespace_affected_count": col.strings.whitespace_affected_count,
            "distinct_after_trim_casefold": col.strings.distinct_after_trim_casefold,
            "integer_like_count": col.strings.integer_like_count,
            "float_like_count": col.strings.float_like_count,
            "pattern_counts": col.strings.census.counts,
            "unit_words": list(col.strings.census.unit_words),
        }
    return {
        "name": col.name,
        "index": col.index,
        "type": col.inferred_type.value,
        "is_categorical": col.is_categorical,
        "row_count": col.row_count,
        "missing_count": col.missing_count,
        "non_missing_count": col.non_missing_count,
        "missing_fraction": col.missing_fraction,
        "distinct_count": col.distinct_count,
        "singleton_count": col.singleton_count,
        "top_values": [[v, c] for v, c in col.top_values],
        "numeric": numeric,
        "sentinel_candidates": [
            {
                "token": h.token,
                "value": h.value,
                "count": h.count,
                "fence_low": h.fence_low,
                "fence_high": h.fence_high,
            }
            for h in col.sentinel_hits
        ],
        "strings": strings,
    }


def profile_as_dict(profile: TableProfile) -> dict:
    return {
        "schema": SCHEMA_ID,
        "tool_version": __version__,
        "source": profile.source_name,
        "rows": profile.row_count,
        "columns": [_column_as_dict(c) for c in profile.columns],
        "duplicate_groups": [
            {"representative": g.representative, "rows": list(g.rows)}
            for g in profile.duplicate_groups
        ],
        "correlations": [
            {"i": e.i, "j": e.j, "r": e.r, "n_pairs": e.n_pairs}
            for e in profile.correlation_entries
        ],
        "warnings": list(profile.warnings),
    }


# --- text rendering ---------------------------------------------------


def _evidence_text(evidence: dict) -> str:
    parts = []
    for key in sorted(evidence):
        value = evidence[key]
        if isinstance(value, float):
            parts.append(f"{key}={format(value, '.6g')}")
        elif isinstance(value, (list, tuple)):
            parts.append(f"{key}=[{', '.join(str(v) for v in value)}]")
        elif isinstance(value, dict):
            inner = ", ".join(f"{k}: {v}" for k, v in sorted(value.items()))
            parts.append(f"{key}={{{inner}}}")
        else:
            parts.append(f"{key}={value}")
    return ", ".join(parts)


def render_text(report: ScanReport, verbosity: int = 1) -> str:
    """Line-oriented report: header, grouped summary, finding blocks.

    verbosity 0 omits the per-finding blocks, 1 is the default, 2 appends
    the effective configuration.
    """
    lines: list[str] = []
    lines.append(
        f"{report.source_name}: {report.row_count} rows x "
        f"{report.column_count} columns"
    )
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    lines.append("")

    by_key = report.counts_by_key()
    by_group = report.counts_by_group()
    width = max(
        max(len(name) for name in GROUP_NAMES.values()),
        max(len(d.key) + 2 for d in list_smells()),
    )
    lines.append("summary")
    for group in GROUP_ORDER:
        lines.append(f"{GROUP_NAMES[group]:<{width}}  {by_group[group]}")
        for desc in list_smells():
            if desc.group == group:
                label = f"  {desc.key}"
                lines.append(f"{label:<{width}}  {by_key[desc.key]}")
    lines.append("")

    if not report.findings:
        lines.append("no data smells detected")
    else:
        total = len(report.findings)
        lines.append(f"{total} finding(s)")
        if verbosity >= 1:
            for f in report.findings:
                lines.append("")
                lines.append(f"[{f.severity}] {f.smell_key}: {f.message}")
                if f.columns:
                    lines.append(f"  columns: {', '.join(f.columns)}")
                lines.append(f"  confidence: {f.confidence}")
                if f.evidence:
                    lines.append(f"  evidence: {_evidence_text(f.evidence)}")
                lines.append(f"  suggestion: {f.suggestion}")

    if verbosity >= 2:
        lines.append("")
        lines.append("effective configuration")
        for key, value in report.config.as_dict().items():
            lines.append(f"  {key} = {value}")

    lines.append("")
    return "\n".join(lines)


def render_json(report: ScanReport) -> bytes:
    return canonical_json(report_as_dict(report))


def render_json_many(reports: list[ScanReport]) -> bytes:
    return canonical_json([report_as_dict(r) for r in reports])


def exit_status(report: ScanReport, fail_on: str = "warning") -> int:
    """0 when no finding reaches the fail_on severity, 1 otherwise.

    Status 2 is reserved for operational failures (I/O, malformed CSV,
    bad config) and is produced by the CLI, never by this function.
    """
    if fail_on == "never":
        return EXIT_CLEAN
    if fail_on not in _SEVERITY_RANK:
        raise ValueError(f"fail_on must be error|warning|info|never, got {fail_on!r}")
    bar = _SEVERITY_RANK[fail_on]
    for f in report.findings:
        if _SEVERITY_RANK[f.severity] >= bar:
            return EXIT_FINDINGS
    return EXIT_CLEAN

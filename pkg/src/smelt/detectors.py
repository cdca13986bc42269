"""The fourteen smell detectors.

Every detector is a pure function of (TableProfile, ScanConfig) returning
zero or more Findings. Mutual-exclusion rules (miss-bin beats miss-null,
str-human beats str-num) are written into the detector conditions
themselves, not applied afterwards, so that disabling one smell never
makes another appear.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass

from .catalogue import describe, group_rank, list_smells
from .config import ScanConfig
from .ingest import InferredType
from .profiler import (
    NUM_WITH_UNIT,
    ColumnProfile,
    TableProfile,
    uid_confidence,
)


@dataclass(frozen=True)
class Finding:
    smell_key: str
    group: str
    columns: tuple[str, ...]  # empty for table-level findings
    severity: str
    confidence: str
    evidence: dict[str, object]
    suggestion: str
    message: str


def _finding(
    key: str,
    columns: tuple[str, ...],
    evidence: dict[str, object],
    message: str,
    severity: str | None = None,
    confidence: str | None = None,
) -> Finding:
    desc = describe(key)
    return Finding(
        smell_key=key,
        group=desc.group,
        columns=columns,
        severity=severity or desc.default_severity,
        confidence=confidence or desc.default_confidence,
        evidence=evidence,
        suggestion=desc.mitigation,
        message=message,
    )


def _words(name: str) -> list[str]:
    """Alphanumeric words of a column name, case-folded."""
    return [t for t in re.split(r"[^a-z0-9]+", name.casefold()) if t]


def _match_lexicon(name: str, lexicon: frozenset[str]) -> str | None:
    """First lexicon entry whose words appear contiguously in the name.

    Whole-word matching: 'sextant_reading' does not match 'sex', while
    'Native_Country' matches 'native country'.
    """
    words = _words(name)
    for entry in sorted(lexicon):
        phrase = entry.split()
        k = len(phrase)
        if any(words[i : i + k] == phrase for i in range(len(words) - k + 1)):
            return entry
    return None


def _segments(name: str) -> list[str]:
    """Name segments for unit detection; keeps symbol tokens like $ or °c."""
    return [
        t
        for t in re.split(r"[\s_()\[\]{},;:/\\|-]+", name.casefold())
        if t
    ]


def detect_red_corr(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Numeric pairs whose |r| reaches the threshold over enough rows."""
    out = []
    for entry in profile.correlation_entries:
        if abs(entry.r) >= cfg.corr_threshold and entry.n_pairs >= cfg.corr_min_pairs:
            a = profile.columns[entry.i].name
            b = profile.columns[entry.j].name
            out.append(
                _finding(
                    "red-corr",
                    (a, b),
                    evidence={"r": entry.r, "n_pairs": entry.n_pairs},
                    message=(
                        f"columns '{a}' and '{b}' are linearly related "
                        f"(r={entry.r:.3f} over {entry.n_pairs} paired rows)"
                    ),
                )
            )
    return out


def detect_red_uid(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Fully populated all-distinct columns that look like primary keys."""
    out = []
    for col in profile.columns:
        verdict = uid_confidence(col, cfg)
        if verdict is None:
            continue
        confidence, rule = verdict
        out.append(
            _finding(
                "red-uid",
                (col.name,),
                evidence={"distinct_ratio": 1.0, "rule": rule},
                message=(
                    f"column '{col.name}' holds a distinct value for every "
                    f"row ({rule})"
                ),
                confidence=confidence,
            )
        )
    return out


def detect_red_dup(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Table-level finding when exact duplicate rows exist."""
    del cfg
    groups = profile.duplicate_groups
    if not groups:
        return []
    redundant = sum(len(g.rows) - 1 for g in groups)
    return [
        _finding(
            "red-dup",
            (),
            evidence={"group_count": len(groups), "redundant_rows": redundant},
            message=(
                f"{redundant} redundant duplicate row(s) across "
                f"{len(groups)} group(s); identifier columns excluded from "
                "the comparison"
            ),
        )
    ]


def detect_cat_hierarchy(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Sensitive categorical columns at risk of ordered label encoding."""
    out = []
    for col in profile.columns:
        if not col.is_categorical:
            continue
        term = _match_lexicon(col.name, cfg.sensitive_lexicon)
        if term is None:
            continue
        out.append(
            _finding(
                "cat-hierarchy",
                (col.name,),
                evidence={
                    "matched_term": term,
                    "distinct_count": col.distinct_count,
                },
                message=(
                    f"categorical column '{col.name}' is a sensitive "
                    f"attribute ({term}); label encoding would impose a "
                    "false order"
                ),
            )
        )
    return out


def detect_cat_bin(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """High-cardinality categorical/string columns that want binning.

    The upper gate (distinct < half the values) keeps identifiers and free
    text out; those are different problems.
    """
    out = []
    for col in profile.columns:
        if not (col.is_categorical or col.inferred_type is InferredType.STRING):
            continue
        if col.distinct_count < cfg.high_cardinality_threshold:
            continue
        if col.distinct_count >= 0.5 * col.non_missing_count:
            continue
        tail_fraction = col.singleton_count / col.distinct_count
        out.append(
            _finding(
                "cat-bin",
                (col.name,),
                evidence={
                    "distinct_count": col.distinct_count,
                    "tail_fraction": tail_fraction,
                },
                message=(
                    f"column '{col.name}' has {col.distinct_count} distinct "
                    f"values ({tail_fraction:.0%} occur once); one-hot "
                    "encoding would blow up the feature space"
                ),
            )
        )
    return out


def detect_misc_sensitive(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Columns of any type whose name marks a protected attribute."""
    out = []
    for col in profile.columns:
        term = _match_lexicon(col.name, cfg.sensitive_lexicon)
        if term is None:
            continue
        out.append(
            _finding(
                "misc-sensitive",
                (col.name,),
                evidence={"matched_term": term},
                message=(
                    f"column '{col.name}' looks like a protected attribute "
                    f"({term})"
                ),
            )
        )
    return out


def detect_misc_balance(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Low-cardinality class-like columns with a starved minority class.

    The minority share is judged against the uniform share 1/k, so a
    three-way 40/35/25 split is healthy while 97/3 is not. Integer columns
    qualify alongside categorical ones: class targets are routinely stored
    as small integer codes.
    """
    out = []
    for col in profile.columns:
        if not (col.is_categorical or col.inferred_type is InferredType.INTEGER):
            continue
        if not 2 <= col.distinct_count <= 10:
            continue
        histogram = col.class_histogram
        if histogram is None or col.non_missing_count == 0:
            continue
        minority_value, minority_count = min(
            histogram, key=lambda vc: (vc[1], vc[0])
        )
        minority_fraction = minority_count / col.non_missing_count
        if minority_fraction >= cfg.imbalance_ratio / col.distinct_count:
            continue
        is_target = re.search(cfg.target_name_pattern, col.name) is not None
        out.append(
            _finding(
                "misc-balance",
                (col.name,),
                evidence={
                    "histogram": {v: c for v, c in histogram},
                    "minority_class": minority_value,
                    "minority_fraction": minority_fraction,
                },
                message=(
                    f"column '{col.name}': rarest class '{minority_value}' "
                    f"covers {minority_fraction:.2%} of rows"
                ),
                severity="error" if is_target else "info",
            )
        )
    return out


def detect_misc_unit(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Quantity-named numeric columns with no unit anywhere in the name."""
    out = []
    for col in profile.columns:
        if not col.inferred_type.is_numeric:
            continue
        segments = _segments(col.name)
        if any(s in cfg.unit_token_lexicon for s in segments):
            continue
        quantity = next(
            (s for s in segments if s in cfg.quantity_lexicon), None
        )
        if quantity is None:
            continue
        out.append(
            _finding(
                "misc-unit",
                (col.name,),
                evidence={"quantity_token": quantity},
                message=(
                    f"numeric column '{col.name}' measures a quantity "
                    f"({quantity}) but names no unit"
                ),
            )
        )
    return out


def _miss_bin_condition(col: ColumnProfile, cfg: ScanConfig) -> bool:
    if col.missing_fraction < cfg.binary_missing_fraction:
        return False
    if col.distinct_count != 1 or not col.top_values:
        return False
    sole = col.top_values[0][0].strip().casefold()
    return sole in cfg.positive_response_lexicon


def detect_miss_null(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Columns past the missingness threshold, plus a table-level tally.

    A column satisfying the binary-missing condition is skipped here even
    if miss-bin is disabled: the blanks are negative responses, not holes.
    """
    out = []
    for col in profile.columns:
        if col.missing_fraction < cfg.missing_fraction_threshold:
            continue
        if _miss_bin_condition(col, cfg):
            continue
        out.append(
            _finding(
                "miss-null",
                (col.name,),
                evidence={
                    "missing_fraction": col.missing_fraction,
                    "missing_count": col.missing_count,
                },
                message=(
                    f"column '{col.name}' is {col.missing_fraction:.1%} "
                    "missing"
                ),
            )
        )
    total_cells = profile.row_count * profile.column_count
    total_missing = sum(col.missing_count for col in profile.columns)
    if total_cells and total_missing > 0:
        fraction = total_missing / total_cells
        out.append(
            _finding(
                "miss-null",
                (),
                evidence={
                    "overall_missing_fraction": fraction,
                    "missing_cells": total_missing,
                },
                message=(
                    f"{total_missing} cell(s) missing overall "
                    f"({fraction:.2%} of the table)"
                ),
                severity="info",
            )
        )
    return out


def detect_miss_sp_val(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Sentinel tokens in string columns; dummy-encoded numbers in numeric ones.

    Numeric candidates must both be frequent enough and sit outside the
    3*IQR fences of the rest of the column, so a plausible in-range -9999
    is left alone.
    """
    out = []
    for col in profile.columns:
        if col.inferred_type is InferredType.STRING:
            if col.non_missing_count == 0:
                continue
            for value, count in col.top_values:
                token = value.strip().casefold()
                if token not in cfg.sentinel_string_lexicon:
                    continue
                fraction = count / col.non_missing_count
                if fraction < cfg.sentinel_min_fraction:
                    continue
                out.append(
                    _finding(
                        "miss-sp-val",
                        (col.name,),
                        evidence={
                            "token": token,
                            "count": count,
                            "fraction": fraction,
                        },
                        message=(
                            f"column '{col.name}': token '{token}' likely "
                            f"marks missing values ({count} cells)"
                        ),
                    )
                )
                break  # one finding per column; most frequent token wins
        elif col.inferred_type.is_numeric:
            for hit in col.sentinel_hits:
                fraction = hit.count / col.non_missing_count
                if fraction < cfg.sentinel_min_fraction:
                    continue
                if hit.fence_low <= hit.value <= hit.fence_high:
                    continue
                out.append(
                    _finding(
                        "miss-sp-val",
                        (col.name,),
                        evidence={
                            "value": hit.value,
                            "count": hit.count,
                            "fraction": fraction,
                            "fence_low": hit.fence_low,
                            "fence_high": hit.fence_high,
                        },
                        message=(
                            f"column '{col.name}': value {hit.token} sits "
                            "far outside the rest of the distribution and "
                            f"likely encodes missing ({hit.count} cells)"
                        ),
                    )
                )
    return out


def detect_miss_bin(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """Mostly-missing columns whose only value is a positive response."""
    out = []
    for col in profile.columns:
        if not _miss_bin_condition(col, cfg):
            continue
        sole = col.top_values[0][0].strip()
        out.append(
            _finding(
                "miss-bin",
                (col.name,),
                evidence={
                    "missing_fraction": col.missing_fraction,
                    "sole_value": sole,
                },
                message=(
                    f"column '{col.name}' is {col.missing_fraction:.0%} "
                    f"missing and otherwise always '{sole}'; blanks likely "
                    "mean the negative response"
                ),
            )
        )
    return out


def _str_human_condition(col: ColumnProfile, cfg: ScanConfig) -> bool:
    if col.strings is None or col.non_missing_count == 0:
        return False
    census = col.strings.census
    coverage = census.counts[NUM_WITH_UNIT] / col.non_missing_count
    return coverage >= cfg.str_pattern_fraction and len(census.unit_words) >= 2


def detect_str_num(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """String columns almost entirely made of parseable numeric shapes.

    Columns meeting the str-human condition are excluded here; mixed-unit
    quantities are the more specific diagnosis.
    """
    out = []
    for col in profile.columns:
        if col.strings is None or col.non_missing_count == 0:
            continue
        census = col.strings.census
        coverage = census.classified / col.non_missing_count
        if coverage < cfg.str_pattern_fraction:
            continue
        if _str_human_condition(col, cfg):
            continue
        out.append(
            _finding(
                "str-num",
                (col.name,),
                evidence={
                    "dominant_pattern": census.dominant(),
                    "coverage": coverage,
                },
                message=(
                    f"column '{col.name}': {coverage:.0%} of values embed "
                    f"numeric data (mostly {census.dominant()})"
                ),
            )
        )
    return out


def detect_str_sanitise(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """String columns where trimming or case-folding merges values."""
    del cfg
    out = []
    for col in profile.columns:
        if col.strings is None:
            continue
        stats = col.strings
        if (
            stats.whitespace_affected_count == 0
            and stats.distinct_after_trim_casefold >= col.distinct_count
        ):
            continue
        out.append(
            _finding(
                "str-sanitise",
                (col.name,),
                evidence={
                    "whitespace_affected": stats.whitespace_affected_count,
                    "distinct_before": col.distinct_count,
                    "distinct_after": stats.distinct_after_trim_casefold,
                },
                message=(
                    f"column '{col.name}' needs sanitising: "
                    f"{stats.whitespace_affected_count} cell(s) carry "
                    f"surrounding whitespace; distinct values "
                    f"{col.distinct_count} -> "
                    f"{stats.distinct_after_trim_casefold} after cleanup"
                ),
            )
        )
    return out


def detect_str_human(profile: TableProfile, cfg: ScanConfig) -> list[Finding]:
    """String columns of unit-tagged numbers mixing two or more units."""
    out = []
    for col in profile.columns:
        if not _str_human_condition(col, cfg):
            continue
        census = col.strings.census
        coverage = census.counts[NUM_WITH_UNIT] / col.non_missing_count
        out.append(
            _finding(
                "str-human",
                (col.name,),
                evidence={
                    "unit_words": list(census.unit_words),
                    "coverage": coverage,
                },
                message=(
                    f"column '{col.name}' holds human-friendly quantities "
                    f"mixing units: {', '.join(census.unit_words)}"
                ),
            )
        )
    return out


_DETECTORS = {
    "red-corr": detect_red_corr,
    "red-dup": detect_red_dup,
    "red-uid": detect_red_uid,
    "cat-bin": detect_cat_bin,
    "cat-hierarchy": detect_cat_hierarchy,
    "misc-balance": detect_misc_balance,
    "misc-sensitive": detect_misc_sensitive,
    "misc-unit": detect_misc_unit,
    "miss-bin": detect_miss_bin,
    "miss-null": detect_miss_null,
    "miss-sp-val": detect_miss_sp_val,
    "str-human": detect_str_human,
    "str-num": detect_str_num,
    "str-sanitise": detect_str_sanitise,
}


def run_all(profile: TableProfile, cfg: ScanConfig | None = None) -> list[Finding]:
    """Run every enabled detector and sort the merged findings.

    Sort order: group (red, cat, misc, miss, str), smell key, then column
    position; table-level findings come before per-column ones of the same
    key.
    """
    cfg = cfg or ScanConfig()
    findings: list[Finding] = []
    for desc in list_smells():
        if not cfg.enabled(desc.key):
            continue
        findings.extend(_DETECTORS[desc.key](profile, cfg))
    if cfg.severity_overrides:
        findings = [
            dataclasses.replace(
                f, severity=cfg.severity_overrides.get(f.smell_key, f.severity)
            )
            for f in findings
        ]
    position = {col.name: col.index for col in profile.columns}

    def sort_key(f: Finding):
        first = position[f.columns[0]] if f.columns else -1
        second = position[f.columns[1]] if len(f.columns) > 1 else -1
        return (group_rank(f.group), f.smell_key, first, second)

    findings.sort(key=sort_key)
    return findings

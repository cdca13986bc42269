"""Column and table profiling.

Produces the immutable TableProfile that every detector consumes: per-column
descriptive statistics, missingness, cardinality, string pattern census,
exact duplicate groups, and pairwise-complete Pearson correlations.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._scalars import is_float_token, is_grouped_number_token
from .config import ScanConfig
from .ingest import InferredType, ParseCounts, TypedTable

# A string column counts as categorical when its cardinality stays under
# max(floor, fraction * non_missing): separates named categories from free
# text and identifiers.
CATEGORICAL_DISTINCT_FLOOR = 20
CATEGORICAL_DISTINCT_FRACTION = 0.05

# full value histograms are only worth keeping for class-like columns
CLASS_HISTOGRAM_MAX_DISTINCT = 16

VERSION = "VERSION"
NUM_WITH_UNIT = "NUM_WITH_UNIT"
FORMATTED_NUM = "FORMATTED_NUM"
PURE_NUM = "PURE_NUM"
OTHER = "OTHER"
PATTERN_CLASSES = (VERSION, NUM_WITH_UNIT, FORMATTED_NUM, PURE_NUM, OTHER)

_VERSION_RE = re.compile(r"[0-9]+(?:\.[0-9]+)+")
_FLOAT_BODY = r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?"
_NUM_THEN_WORD_RE = re.compile(rf"{_FLOAT_BODY}\s+([A-Za-z]+)")
_CURRENCY_RE = re.compile(r"([$€£¥])\s?[0-9][0-9,]*(?:\.[0-9]+)?")
_PERCENT_RE = re.compile(r"[+-]?[0-9][0-9,]*(?:\.[0-9]+)?\s?%")


def classify_token(token: str) -> tuple[str, str | None]:
    """Assign a trimmed cell to one pattern class, first match wins.

    Returns the class and, for NUM_WITH_UNIT, the normalized unit word
    (case-folded, trailing plural 's' stripped).
    """
    if _VERSION_RE.fullmatch(token):
        return VERSION, None
    m = _NUM_THEN_WORD_RE.fullmatch(token)
    if m:
        word = m.group(1).casefold()
        if len(word) > 1 and word.endswith("s"):
            word = word[:-1]
        return NUM_WITH_UNIT, word
    m = _CURRENCY_RE.fullmatch(token)
    if m:
        return NUM_WITH_UNIT, m.group(1)
    if _PERCENT_RE.fullmatch(token):
        return NUM_WITH_UNIT, "%"
    if is_grouped_number_token(token):
        return FORMATTED_NUM, None
    if is_float_token(token):
        return PURE_NUM, None
    return OTHER, None


@dataclass(frozen=True)
class PatternCensus:
    counts: dict[str, int]
    unit_words: tuple[str, ...]  # sorted, distinct

    @property
    def classified(self) -> int:
        """Cells in any numeric-flavoured class (everything but OTHER)."""
        return sum(v for k, v in self.counts.items() if k != OTHER)

    def dominant(self) -> str:
        ordered = sorted(
            ((k, v) for k, v in self.counts.items() if k != OTHER),
            key=lambda kv: (-kv[1], kv[0]),
        )
        return ordered[0][0] if ordered and ordered[0][1] > 0 else OTHER


def detect_str_patterns(cells: Iterable[str | None]) -> PatternCensus:
    """Census the non-missing trimmed cells of a string column."""
    counter = Counter(c for c in cells if c is not None)
    return _census(counter)


def _census(counter: Counter) -> PatternCensus:
    counts = dict.fromkeys(PATTERN_CLASSES, 0)
    units: set[str] = set()
    for value, n in counter.items():
        cls, unit = classify_token(value.strip())
        counts[cls] += n
        if unit is not None:
            units.add(unit)
    return PatternCensus(counts=counts, unit_words=tuple(sorted(units)))


@dataclass(frozen=True)
class NumericStats:
    minimum: float
    maximum: float
    mean: float
    stddev: float | None  # sample (n-1); None when fewer than 2 values
    q1: float
    q2: float
    q3: float


@dataclass(frozen=True)
class SentinelHit:
    """A dummy-encoded-missing candidate found in a numeric column.

    Fences are Tukey-style Q1 - 3*IQR / Q3 + 3*IQR computed over the column
    *excluding* this value, so the sentinel cannot distort its own test.
    """

    token: str
    value: float
    count: int
    fence_low: float
    fence_high: float


@dataclass(frozen=True)
class StringStats:
    whitespace_affected_count: int  # cells whose trimmed form differs from raw
    distinct_after_trim_casefold: int
    integer_like_count: int
    float_like_count: int
    census: PatternCensus


@dataclass(frozen=True)
class ColumnProfile:
    name: str
    index: int
    inferred_type: InferredType
    is_categorical: bool
    row_count: int
    missing_count: int
    non_missing_count: int
    distinct_count: int
    singleton_count: int  # distinct values occurring exactly once
    top_values: tuple[tuple[str, int], ...]
    # complete value histogram, only kept for low-cardinality columns so the
    # balance check never depends on the top_values_k setting
    class_histogram: tuple[tuple[str, int], ...] | None
    numeric: NumericStats | None
    sentinel_hits: tuple[SentinelHit, ...]
    strings: StringStats | None

    @property
    def missing_fraction(self) -> float:
        return self.missing_count / self.row_count if self.row_count else 0.0


@dataclass(frozen=True)
class DuplicateGroup:
    representative: int  # lowest row index in the group
    rows: tuple[int, ...]


@dataclass(frozen=True)
class CorrelationEntry:
    i: int
    j: int
    r: float
    n_pairs: int


@dataclass(frozen=True)
class TableProfile:
    source_name: str
    row_count: int
    column_count: int
    columns: tuple[ColumnProfile, ...]
    duplicate_groups: tuple[DuplicateGroup, ...]
    correlation_entries: tuple[CorrelationEntry, ...]
    warnings: tuple[str, ...]

    def column_by_name(self, name: str) -> ColumnProfile:
        for col in self.columns:
            if col.name == name:
                return col
        raise KeyError(name)


def _to_float_array(values: Sequence) -> np.ndarray:
    out = np.empty(len(values), dtype=float)
    for i, v in enumerate(values):
        if v is None:
            out[i] = math.nan
        elif isinstance(v, str):
            try:
                out[i] = float(v)
            except ValueError:
                out[i] = math.nan
        else:
            out[i] = float(v)
    return out


def pearson(x: Sequence, y: Sequence) -> tuple[float | None, int]:
    """Pearson r over pairwise-complete observations.

    Accepts numbers, numeric strings, or None/NaN for missing. Returns
    (None, n_pairs) when fewer than two complete pairs exist or either
    side is constant over the paired rows.
    """
    if len(x) != len(y):
        raise ValueError("columns must have equal length")
    return _pearson_arrays(_to_float_array(x), _to_float_array(y))


def _pearson_arrays(xa: np.ndarray, ya: np.ndarray) -> tuple[float | None, int]:
    mask = ~np.isnan(xa) & ~np.isnan(ya)
    n = int(mask.sum())
    if n < 2:
        return None, n
    xs = xa[mask]
    ys = ya[mask]
    dx = xs - xs.mean()
    dy = ys - ys.mean()
    sx = math.sqrt(float(np.mean(dx * dx)))
    sy = math.sqrt(float(np.mean(dy * dy)))
    if sx == 0.0 or sy == 0.0:
        return None, n
    r = float(np.mean(dx * dy)) / (sx * sy)
    return max(-1.0, min(1.0, r)), n


def _is_categorical(
    inferred: InferredType, distinct: int, non_missing: int
) -> bool:
    if inferred is InferredType.BOOLEAN:
        return True
    if inferred is InferredType.STRING and non_missing > 0:
        bound = max(
            CATEGORICAL_DISTINCT_FLOOR,
            CATEGORICAL_DISTINCT_FRACTION * non_missing,
        )
        return distinct <= bound
    return False


def _sentinel_hits(
    counter: Counter,
    fmap: dict[str, float],
    vals: np.ndarray,
    pattern: re.Pattern,
) -> tuple[SentinelHit, ...]:
    candidates: set[float] = set()
    for raw in counter:
        token = raw.strip()
        value = fmap[raw]
        if pattern.fullmatch(token):
            candidates.add(value)
        elif value.is_integer() and pattern.fullmatch(str(int(value))):
            candidates.add(value)  # e.g. "-9999.0" in a float column
    hits = []
    for value in sorted(candidates):
        count = int(np.count_nonzero(vals == value))
        rest = vals[vals != value]
        if rest.size == 0:
            continue  # the whole column is the sentinel; nothing to fence against
        q1, q3 = (float(q) for q in np.quantile(rest, (0.25, 0.75)))
        iqr = q3 - q1
        token = str(int(value)) if value.is_integer() else repr(value)
        hits.append(
            SentinelHit(
                token=token,
                value=value,
                count=count,
                fence_low=q1 - 3.0 * iqr,
                fence_high=q3 + 3.0 * iqr,
            )
        )
    return tuple(hits)


def _profile_column(
    cells: Sequence[str | None],
    counter: Counter,
    inferred: InferredType,
    counts: ParseCounts,
    name: str,
    index: int,
    row_count: int,
    cfg: ScanConfig,
) -> tuple[ColumnProfile, np.ndarray | None]:
    non_missing = counts.non_missing
    distinct = len(counter)
    singletons = sum(1 for c in counter.values() if c == 1)
    # ties broken by value so row order cannot leak into the profile
    ranked = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    top = tuple(ranked[: cfg.top_values_k])
    histogram = tuple(ranked) if distinct <= CLASS_HISTOGRAM_MAX_DISTINCT else None

    numeric = None
    arr = None
    sentinel_hits: tuple[SentinelHit, ...] = ()
    if inferred.is_numeric and non_missing > 0:
        fmap = {v: float(v) for v in counter}
        arr = np.array(
            [math.nan if c is None else fmap[c] for c in cells], dtype=float
        )
        vals = arr[~np.isnan(arr)]
        q1, q2, q3 = (float(q) for q in np.quantile(vals, (0.25, 0.5, 0.75)))
        numeric = NumericStats(
            minimum=float(vals.min()),
            maximum=float(vals.max()),
            mean=float(vals.mean()),
            stddev=float(vals.std(ddof=1)) if vals.size >= 2 else None,
            q1=q1,
            q2=q2,
            q3=q3,
        )
        sentinel_hits = _sentinel_hits(
            counter, fmap, vals, re.compile(cfg.sentinel_number_pattern)
        )

    strings = None
    if inferred is InferredType.STRING:
        strings = StringStats(
            whitespace_affected_count=sum(
                c for v, c in counter.items() if v.strip() != v
            ),
            distinct_after_trim_casefold=len(
                {v.strip().casefold() for v in counter}
            ),
            integer_like_count=counts.integer,
            float_like_count=counts.float_,
            census=_census(counter),
        )

    profile = ColumnProfile(
        name=name,
        index=index,
        inferred_type=inferred,
        is_categorical=_is_categorical(inferred, distinct, non_missing),
        row_count=row_count,
        missing_count=row_count - non_missing,
        non_missing_count=non_missing,
        distinct_count=distinct,
        singleton_count=singletons,
        top_values=top,
        class_histogram=histogram,
        numeric=numeric,
        sentinel_hits=sentinel_hits,
        strings=strings,
    )
    return profile, arr


def profile_column(
    table: TypedTable, index: int, cfg: ScanConfig | None = None
) -> ColumnProfile:
    """Profile a single column of a parsed table."""
    cfg = cfg or ScanConfig()
    profile, _ = _profile_column(
        table.raw.column(index),
        table.value_counts[index],
        table.column_types[index],
        table.parse_stats[index],
        table.raw.headers[index],
        index,
        table.raw.row_count,
        cfg,
    )
    return profile


def uid_confidence(
    profile: ColumnProfile, cfg: ScanConfig
) -> tuple[str, str] | None:
    """Unique-identifier rule: (confidence, matched rule) or None.

    A column qualifies at all only when fully populated with all-distinct
    values over enough rows; Float and Boolean columns never qualify.
    "high" needs a key-like name or a contiguous integer run.
    """
    if profile.row_count < cfg.uid_min_rows:
        return None
    if profile.missing_count != 0 or profile.non_missing_count == 0:
        return None
    if profile.distinct_count != profile.non_missing_count:
        return None
    if profile.inferred_type not in (InferredType.INTEGER, InferredType.STRING):
        return None
    if re.search(cfg.uid_name_pattern, profile.name):
        return "high", "key-like name"
    if profile.inferred_type is InferredType.INTEGER and profile.numeric is not None:
        span = profile.numeric.maximum - profile.numeric.minimum
        if span == profile.non_missing_count - 1:
            return "high", "contiguous integer sequence"
    return "medium", "all values distinct"


def find_duplicate_rows(
    table: TypedTable, ignore_columns: Iterable[int] = ()
) -> tuple[DuplicateGroup, ...]:
    """Group exactly identical rows (missing matches missing).

    ``ignore_columns`` drops the given column indices from the row key,
    used to keep unique identifiers from hiding duplicates. If every
    column is ignored there is no key left and no groups are reported.
    """
    ignored = set(ignore_columns)
    keep = [i for i in range(table.raw.column_count) if i not in ignored]
    if not keep:
        return ()
    full = len(keep) == table.raw.column_count
    groups: dict[tuple, list[int]] = {}
    for idx, row in enumerate(table.raw.cells):
        key = tuple(row) if full else tuple(row[i] for i in keep)
        groups.setdefault(key, []).append(idx)
    dups = [
        DuplicateGroup(representative=members[0], rows=tuple(members))
        for members in groups.values()
        if len(members) >= 2
    ]
    dups.sort(key=lambda g: g.representative)
    return tuple(dups)


def profile_table(table: TypedTable, cfg: ScanConfig | None = None) -> TableProfile:
    """Run the full profiling checklist over a parsed table."""
    cfg = cfg or ScanConfig()
    raw = table.raw
    columns = raw.columns()
    profiles: list[ColumnProfile] = []
    arrays: dict[int, np.ndarray] = {}
    for i, cells in enumerate(columns):
        profile, arr = _profile_column(
            cells,
            table.value_counts[i],
            table.column_types[i],
            table.parse_stats[i],
            raw.headers[i],
            i,
            raw.row_count,
            cfg,
        )
        profiles.append(profile)
        if arr is not None:
            arrays[i] = arr

    uid_high = set()
    for p in profiles:
        verdict = uid_confidence(p, cfg)
        if verdict is not None and verdict[0] == "high":
            uid_high.add(p.index)
    duplicate_groups = find_duplicate_rows(table, uid_high)

    entries: list[CorrelationEntry] = []
    for i, j in itertools.combinations(sorted(arrays), 2):
        r, n_pairs = _pearson_arrays(arrays[i], arrays[j])
        if r is not None:
            entries.append(CorrelationEntry(i=i, j=j, r=r, n_pairs=n_pairs))

    return TableProfile(
        source_name=raw.source_name,
        row_count=raw.row_count,
        column_count=raw.column_count,
        columns=tuple(profiles),
        duplicate_groups=duplicate_groups,
        correlation_entries=tuple(entries),
        warnings=tuple(raw.warnings),
    )

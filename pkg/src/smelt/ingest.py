"""CSV ingestion: RFC-4180 reading, missing-cell normalization, type inference.

Cells are kept in their raw untrimmed form (the sanitisation detector needs
it); a cell is missing iff its trimmed form is one of the configured null
tokens. Type inference is strict: a column gets a type only when 100% of
its non-missing trimmed cells match, so mixed columns stay String and the
per-type parse counts preserve the evidence.
"""

from __future__ import annotations

import csv
import io
import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import BinaryIO, Sequence

from ._scalars import BOOLEAN_TOKENS, is_float_token, is_integer_token

DEFAULT_NULL_TOKENS = frozenset(
    {"", "NA", "N/A", "NaN", "nan", "null", "NULL", "nil", "None"}
)


class MalformedCsvError(ValueError):
    """Structurally broken CSV, e.g. an unterminated quote at end of input."""


class EmptyTableError(ValueError):
    """The source contains no data rows."""


@dataclass(frozen=True)
class ParseOptions:
    delimiter: str = ","
    quote: str = '"'
    null_tokens: frozenset[str] = DEFAULT_NULL_TOKENS
    has_header: bool = True
    max_rows: int | None = None

    def __post_init__(self):
        if len(self.delimiter) != 1 or len(self.quote) != 1:
            raise ValueError("delimiter and quote must be single characters")
        if self.delimiter == self.quote:
            raise ValueError("delimiter and quote must differ")
        if self.max_rows is not None and self.max_rows <= 0:
            raise ValueError("max_rows must be positive")
        # The empty string always marks a missing cell; without it an empty
        # field would count as data.
        object.__setattr__(
            self, "null_tokens", frozenset(self.null_tokens) | {""}
        )


class InferredType(Enum):
    BOOLEAN = "boolean"
    INTEGER = "integer"
    FLOAT = "float"
    STRING = "string"

    @property
    def is_numeric(self) -> bool:
        return self in (InferredType.INTEGER, InferredType.FLOAT)


@dataclass(frozen=True)
class ParseCounts:
    """How many non-missing cells of a column matched each candidate type."""

    non_missing: int
    boolean: int
    integer: int
    float_: int

    @property
    def string(self) -> int:
        return self.non_missing  # every cell trivially matches String


@dataclass
class RawTable:
    source_name: str
    headers: list[str]
    cells: list[list[str | None]]  # row-major, None = missing
    warnings: list[str] = field(default_factory=list)
    _column_cache: list[tuple[str | None, ...]] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def row_count(self) -> int:
        return len(self.cells)

    @property
    def column_count(self) -> int:
        return len(self.headers)

    def column(self, index: int) -> tuple[str | None, ...]:
        return self.columns()[index]

    def columns(self) -> list[tuple[str | None, ...]]:
        # transposing a few million cells is not free; both parsing and
        # profiling need the column view, so keep it
        if self._column_cache is None:
            if not self.cells:
                self._column_cache = [() for _ in self.headers]
            else:
                self._column_cache = list(zip(*self.cells))
        return self._column_cache


@dataclass
class TypedTable:
    raw: RawTable
    column_types: list[InferredType]
    parse_stats: list[ParseCounts]
    # per-column census of non-missing cell values; cached here because the
    # profiler reuses it for distinct counts and top values
    value_counts: list[Counter]


def _check_quote_balance(text: str, delimiter: str, quote: str) -> None:
    """Reject input whose final quoted field is never closed.

    Walks quote characters only (cheap on large files). A quote opens a
    field when it sits at a field boundary; inside a quoted field a doubled
    quote is an escape. Anything still open at EOF is malformed, reported
    with the byte offset of the offending opening quote.
    """
    n = len(text)
    pos = 0
    in_quotes = False
    open_at = -1
    boundary = {delimiter, "\n", "\r"}
    while True:
        i = text.find(quote, pos)
        if i == -1:
            break
        if in_quotes:
            if i + 1 < n and text[i + 1] == quote:
                pos = i + 2  # escaped quote, still inside
            else:
                in_quotes = False
                pos = i + 1
        else:
            if i == 0 or text[i - 1] in boundary:
                in_quotes = True
                open_at = i
            pos = i + 1
    if in_quotes:
        offset = len(text[:open_at].encode("utf-8"))
        raise MalformedCsvError(
            f"unterminated quote opened at byte offset {offset}"
        )


def _decode(data: bytes, warnings: list[str]) -> str:
    if data.startswith(b"\xef\xbb\xbf"):
        data = data[3:]  # UTF-8 BOM
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        warnings.append(
            f"invalid UTF-8 starting at byte {exc.start}; "
            "offending bytes replaced with U+FFFD"
        )
        return data.decode("utf-8", errors="replace")


def _read_source(source: str | Path | BinaryIO) -> tuple[bytes, str]:
    if isinstance(source, (str, Path)):
        return Path(source).read_bytes(), str(source)
    data = source.read()
    if isinstance(data, str):
        data = data.encode("utf-8")
    return data, getattr(source, "name", "<stream>")


def _dedupe_headers(names: list[str]) -> list[str]:
    """Disambiguate repeated header names with .1, .2, ... suffixes."""
    seen: dict[str, int] = {}
    out: list[str] = []
    for name in names:
        if name not in seen:
            seen[name] = 0
            out.append(name)
        else:
            seen[name] += 1
            candidate = f"{name}.{seen[name]}"
            while candidate in seen:
                seen[name] += 1
                candidate = f"{name}.{seen[name]}"
            seen[candidate] = 0
            out.append(candidate)
    return out


def read_csv(source: str | Path | BinaryIO, options: ParseOptions | None = None) -> RawTable:
    """Parse CSV bytes into a RawTable with missing cells normalized.

    Ragged rows are padded with missing cells up to the widest row seen
    and reported as a parse warning rather than failing the whole file.
    """
    options = options or ParseOptions()
    warnings: list[str] = []
    data, source_name = _read_source(source)
    text = _decode(data, warnings)
    _check_quote_balance(text, options.delimiter, options.quote)

    reader = csv.reader(
        io.StringIO(text, newline=""),
        delimiter=options.delimiter,
        quotechar=options.quote,
    )
    if options.has_header:
        header_row = next(reader, None)
        if header_row is None:
            raise EmptyTableError(f"{source_name}: no data rows")
        records = list(itertools.islice(reader, options.max_rows))
        headers = [h.strip() for h in header_row]
    else:
        records = list(itertools.islice(reader, options.max_rows))
        headers = []
    if not records:
        raise EmptyTableError(f"{source_name}: no data rows")

    width = max(len(headers), max(len(r) for r in records))
    if options.has_header:
        for i, name in enumerate(headers):
            if name.strip() in options.null_tokens:
                headers[i] = f"col_{i}"
        if len(headers) < width:
            warnings.append(
                f"data rows wider than header; columns col_{len(headers)}.."
                f"col_{width - 1} synthesized"
            )
            headers.extend(f"col_{i}" for i in range(len(headers), width))
    else:
        headers = [f"col_{i}" for i in range(width)]
    headers = _dedupe_headers(headers)

    nulls = options.null_tokens
    norm_cache: dict[str, str | None] = {}

    def normalize(value: str) -> str | None:
        try:
            return norm_cache[value]
        except KeyError:
            out = None if value.strip() in nulls else value
            norm_cache[value] = out
            return out

    ragged = 0
    first_ragged = -1
    pad_template = [None] * width
    cells: list[list[str | None]] = []
    for idx, record in enumerate(records):
        row = [normalize(v) for v in record]
        if len(row) < width:
            ragged += 1
            if first_ragged < 0:
                first_ragged = idx
            row.extend(pad_template[len(row):])
        cells.append(row)
    if ragged:
        warnings.append(
            f"{ragged} ragged data row(s) padded to {width} columns "
            f"(first at data row {first_ragged})"
        )

    return RawTable(
        source_name=source_name, headers=headers, cells=cells, warnings=warnings
    )


def _count_types(counter: Counter) -> ParseCounts:
    non_missing = 0
    booleans = 0
    integers = 0
    floats = 0
    for value, count in counter.items():
        token = value.strip()
        non_missing += count
        if token.casefold() in BOOLEAN_TOKENS:
            booleans += count
        elif is_integer_token(token):
            integers += count
            floats += count  # every integer is float-parseable
        elif is_float_token(token):
            floats += count
    return ParseCounts(
        non_missing=non_missing, boolean=booleans, integer=integers, float_=floats
    )


def _resolve_type(counts: ParseCounts) -> InferredType:
    if counts.non_missing == 0:
        return InferredType.STRING
    if counts.boolean == counts.non_missing:
        return InferredType.BOOLEAN
    if counts.integer == counts.non_missing:
        return InferredType.INTEGER
    if counts.float_ == counts.non_missing:
        return InferredType.FLOAT
    return InferredType.STRING


def infer_column_type(cells: Sequence[str | None]) -> tuple[InferredType, ParseCounts]:
    """Most specific type matching 100% of non-missing trimmed cells.

    Candidate order is Boolean > Integer > Float > String; a column with no
    non-missing cells resolves to String.
    """
    counter = Counter(c for c in cells if c is not None)
    counts = _count_types(counter)
    return _resolve_type(counts), counts


def parse_table(raw: RawTable, options: ParseOptions | None = None) -> TypedTable:
    """Infer a type for every column and record its parse counts."""
    del options  # reserved; inference currently needs nothing beyond the cells
    column_types: list[InferredType] = []
    parse_stats: list[ParseCounts] = []
    value_counts: list[Counter] = []
    for column in raw.columns():
        counter = Counter(c for c in column if c is not None)
        counts = _count_types(counter)
        column_types.append(_resolve_type(counts))
        parse_stats.append(counts)
        value_counts.append(counter)
    return TypedTable(
        raw=raw,
        column_types=column_types,
        parse_stats=parse_stats,
        value_counts=value_counts,
    )

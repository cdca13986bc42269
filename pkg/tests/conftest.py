import io
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from smelt import ParseOptions, parse_table, read_csv
from smelt.ingest import RawTable

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"

SMELL_KEYS = (
    "red-corr", "red-dup", "red-uid",
    "cat-bin", "cat-hierarchy",
    "misc-balance", "misc-sensitive", "misc-unit",
    "miss-bin", "miss-null", "miss-sp-val",
    "str-human", "str-num", "str-sanitise",
)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS


def parse_text(text: str, options: ParseOptions | None = None):
    """Full ingest pipeline over an in-memory CSV document."""
    raw = read_csv(io.BytesIO(text.encode("utf-8")), options)
    return parse_table(raw, options)


def table_from_columns(columns: dict[str, list[str | None]], source="<test>"):
    """Build a TypedTable directly from column data, bypassing CSV."""
    headers = list(columns)
    length = {len(v) for v in columns.values()}
    assert len(length) == 1, "columns must have equal length"
    cells = [list(row) for row in zip(*columns.values())]
    raw = RawTable(source_name=source, headers=headers, cells=cells)
    return parse_table(raw)

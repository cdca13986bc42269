"""smelt: a data-smell linter for CSV datasets.

Profiles columns (types, statistics, missingness, cardinality, duplicates,
correlations) and detects fourteen catalogued data smells, emitting
evidence-backed findings with refactoring suggestions.
"""

from ._version import __version__
from .catalogue import SmellDescriptor, UnknownSmellError, describe, list_smells
from .config import ConfigError, ScanConfig, load_config
from .detectors import Finding, run_all
from .ingest import (
    EmptyTableError,
    InferredType,
    MalformedCsvError,
    ParseOptions,
    RawTable,
    TypedTable,
    infer_column_type,
    parse_table,
    read_csv,
)
from .profiler import (
    ColumnProfile,
    TableProfile,
    detect_str_patterns,
    find_duplicate_rows,
    pearson,
    profile_column,
    profile_table,
)
from .report import (
    ScanReport,
    build_report,
    exit_status,
    render_json,
    render_text,
)

__all__ = [
    "__version__",
    "ColumnProfile",
    "ConfigError",
    "EmptyTableError",
    "Finding",
    "InferredType",
    "MalformedCsvError",
    "ParseOptions",
    "RawTable",
    "ScanConfig",
    "ScanReport",
    "SmellDescriptor",
    "TableProfile",
    "TypedTable",
    "UnknownSmellError",
    "build_report",
    "describe",
    "detect_str_patterns",
    "exit_status",
    "find_duplicate_rows",
    "infer_column_type",
    "list_smells",
    "load_config",
    "parse_table",
    "pearson",
    "profile_column",
    "profile_table",
    "read_csv",
    "render_json",
    "render_text",
    "run_all",
]

"""Command-line entry point: scan, profile, list, explain."""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from pathlib import Path

from ._version import __version__
from .catalogue import (
    UnknownSmellError,
    describe,
    descriptor_as_dict,
    list_smells,
)
from .config import ConfigError, ScanConfig, load_config, parse_set_option
from .detectors import run_all
from .ingest import (
    DEFAULT_NULL_TOKENS,
    EmptyTableError,
    MalformedCsvError,
    ParseOptions,
    parse_table,
    read_csv,
)
from .profiler import profile_table
from .report import (
    EXIT_CLEAN,
    EXIT_ERROR,
    build_report,
    canonical_json,
    exit_status,
    profile_as_dict,
    render_json,
    render_json_many,
    render_text,
)

CONFIG_ENV_VAR = "SMELT_CONFIG"


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("inputs", nargs="+", metavar="CSV", help="input CSV file(s)")
    parser.add_argument(
        "--delimiter", default=",", help='field delimiter (default ","; use \\t for tab)'
    )
    parser.add_argument(
        "--null-token",
        action="append",
        default=None,
        metavar="TOKEN",
        help="treat TOKEN as missing; repeatable, replaces the default set",
    )
    parser.add_argument(
        "--no-header",
        action="store_true",
        help="first row is data; columns become col_0..col_{k-1}",
    )
    parser.add_argument(
        "--max-rows", type=int, default=None, metavar="N",
        help="scan only the first N data rows",
    )
    parser.add_argument(
        "--output", default=None, metavar="PATH", help="write the report here instead of stdout"
    )


def _add_config_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config", default=None, metavar="PATH",
        help=f"JSON config file (falls back to ${CONFIG_ENV_VAR})",
    )
    parser.add_argument(
        "--set",
        action="append",
        default=[],
        metavar="FIELD=VALUE",
        dest="set_options",
        help="override one config field; repeatable",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smelt",
        description="Profile CSV datasets and detect data smells.",
    )
    parser.add_argument("--version", action="version", version=f"smelt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="detect data smells in CSV files")
    _add_input_options(scan)
    _add_config_options(scan)
    scan.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    scan.add_argument(
        "--enable", action="append", default=[], metavar="KEY",
        help="re-enable a smell disabled by the config file; repeatable",
    )
    scan.add_argument(
        "--disable", action="append", default=[], metavar="KEY",
        help="disable one smell; repeatable",
    )
    scan.add_argument(
        "--fail-on",
        choices=("error", "warning", "info", "never"),
        default="warning",
        help="lowest severity that makes the exit status 1 (default warning)",
    )
    scan.add_argument(
        "--quiet", action="store_true", help="text format: summary only"
    )
    scan.add_argument(
        "--verbose", action="store_true",
        help="text format: also echo the effective configuration",
    )

    profile = sub.add_parser("profile", help="dump the table profile as JSON")
    _add_input_options(profile)
    _add_config_options(profile)

    list_cmd = sub.add_parser("list", help="list the smell catalogue")
    list_cmd.add_argument(
        "--format", choices=("text", "json"), default="text"
    )

    explain = sub.add_parser("explain", help="show one catalogue entry in full")
    explain.add_argument("key", help="smell key, e.g. red-corr")
    explain.add_argument(
        "--format", choices=("text", "json"), default="text"
    )

    return parser


def _parse_options_from_args(args: argparse.Namespace) -> ParseOptions:
    delimiter = "\t" if args.delimiter == "\\t" else args.delimiter
    null_tokens = (
        DEFAULT_NULL_TOKENS
        if args.null_token is None
        else frozenset(args.null_token)
    )
    return ParseOptions(
        delimiter=delimiter,
        null_tokens=null_tokens,
        has_header=not args.no_header,
        max_rows=args.max_rows,
    )


def _config_from_args(args: argparse.Namespace) -> ScanConfig:
    path = args.config or os.environ.get(CONFIG_ENV_VAR) or None
    overrides = parse_set_option(args.set_options)
    cfg = load_config(path, overrides)
    disabled = set(cfg.disabled_smells)
    for key in getattr(args, "disable", []):
        describe(key)  # raises UnknownSmellError for bad keys
        disabled.add(key)
    for key in getattr(args, "enable", []):
        describe(key)
        disabled.discard(key)
    if disabled != set(cfg.disabled_smells):
        cfg = dataclasses.replace(cfg, disabled_smells=frozenset(disabled))
    return cfg


def _emit(payload: str | bytes, output: str | None) -> None:
    if isinstance(payload, str):
        payload = payload.encode("utf-8")
    if output is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        Path(output).write_bytes(payload)


def _cmd_scan(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
        options = _parse_options_from_args(args)
    except (ConfigError, UnknownSmellError, ValueError) as exc:
        print(f"smelt: error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    verbosity = 0 if args.quiet else (2 if args.verbose else 1)
    reports = []
    statuses = []
    for path in args.inputs:
        try:
            raw = read_csv(path, options)
            typed = parse_table(raw, options)
            profile = profile_table(typed, cfg)
            findings = run_all(profile, cfg)
            report = build_report(profile, findings, cfg)
        except (OSError, MalformedCsvError, EmptyTableError) as exc:
            print(f"smelt: {path}: {exc}", file=sys.stderr)
            statuses.append(EXIT_ERROR)
            continue
        reports.append(report)
        statuses.append(exit_status(report, args.fail_on))

    if args.format == "json":
        if len(args.inputs) == 1:
            payload = (render_json(reports[0]) + b"\n") if reports else b""
        else:
            payload = render_json_many(reports) + b"\n"
    else:
        payload = "\n".join(render_text(r, verbosity) for r in reports)
    if payload:
        _emit(payload, args.output)
    return max(statuses, default=EXIT_CLEAN)


def _cmd_profile(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
        options = _parse_options_from_args(args)
    except (ConfigError, ValueError) as exc:
        print(f"smelt: error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    dumps = []
    status = EXIT_CLEAN
    for path in args.inputs:
        try:
            raw = read_csv(path, options)
            typed = parse_table(raw, options)
            profile = profile_table(typed, cfg)
        except (OSError, MalformedCsvError, EmptyTableError) as exc:
            print(f"smelt: {path}: {exc}", file=sys.stderr)
            status = EXIT_ERROR
            continue
        dumps.append(profile_as_dict(profile))

    if dumps:
        doc = dumps[0] if len(args.inputs) == 1 else dumps
        _emit(canonical_json(doc) + b"\n", args.output)
    return status


def _cmd_list(args: argparse.Namespace) -> int:
    smells = list_smells()
    if args.format == "json":
        payload = canonical_json([descriptor_as_dict(d) for d in smells]) + b"\n"
        sys.stdout.buffer.write(payload)
        return EXIT_CLEAN
    key_width = max(len(d.key) for d in smells)
    current_group = None
    lines = []
    for d in smells:
        if d.group != current_group:
            current_group = d.group
            lines.append(f"{d.group_name} ({d.group})")
        lines.append(f"  {d.key:<{key_width}}  {d.name}")
    lines.append("")
    sys.stdout.write("\n".join(lines))
    return EXIT_CLEAN


def _cmd_explain(args: argparse.Namespace) -> int:
    try:
        d = describe(args.key)
    except UnknownSmellError as exc:
        print(f"smelt: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "json":
        sys.stdout.buffer.write(canonical_json(descriptor_as_dict(d)) + b"\n")
        return EXIT_CLEAN
    lines = [
        f"{d.key}: {d.name}",
        f"group: {d.group_name} ({d.group})",
        f"default severity: {d.default_severity}; confidence: {d.default_confidence}",
        "",
        d.description,
        "",
        f"why it matters: {d.rationale}",
        f"suggestion: {d.mitigation}",
        f"docs: catalogue section {d.section}",
        "",
    ]
    sys.stdout.write("\n".join(lines))
    return EXIT_CLEAN


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed its message
        code = exc.code
        return code if isinstance(code, int) else EXIT_ERROR
    if args.command == "scan":
        return _cmd_scan(args)
    if args.command == "profile":
        return _cmd_profile(args)
    if args.command == "list":
        return _cmd_list(args)
    return _cmd_explain(args)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

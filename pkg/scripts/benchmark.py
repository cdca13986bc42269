#!/usr/bin/env python3
"""Generate a large synthetic CSV and time a full scan over it.

The generated table mixes the column shapes the scanner has to work for:
wide floats, integers, low- and high-cardinality categories, a version
column, a mostly-missing column, a sentinel-ridden numeric column, and a
contiguous id column. Values are drawn from pre-formatted pools so
generation stays fast and deterministic.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))


def _float_pool(rng: random.Random, n: int) -> list[str]:
    return [f"{rng.uniform(100, 999):.14f}" for _ in range(n)]


def _int_pool(rng: random.Random, n: int) -> list[str]:
    return [str(rng.randint(10**15, 10**16 - 1)) for _ in range(n)]


def _category_pool(rng: random.Random, n: int) -> list[str]:
    return [f"segment-{chr(97 + i % 26)}{i:02d}-group" for i in range(n)]


def _column_pools(rng: random.Random, cols: int) -> list[list[str]]:
    pools: list[list[str]] = []
    for c in range(cols - 4):
        kind = c % 4
        if kind in (0, 1):
            pools.append(_float_pool(rng, 4000))
        elif kind == 2:
            pools.append(_int_pool(rng, 3000))
        else:
            pools.append(_category_pool(rng, 18))
    # version strings: a str-num column
    pools.append([f"{a}.{b}.{c}" for a in (1, 2) for b in range(8) for c in range(10)])
    # mostly missing
    pools.append([""] * 9 + ["approved-full"])
    # sentinel-ridden readings
    pools.append([f"{rng.randint(0, 2000)}" for _ in range(980)] + ["-9999"] * 20)
    return pools


def generate_csv(path: str | Path, rows: int = 100_000, cols: int = 30,
                 seed: int = 20240601) -> Path:
    """Write a deterministic rows x cols CSV of roughly 50 MB at defaults."""
    if cols < 6:
        raise ValueError("need at least 6 columns")
    rng = random.Random(seed)
    pools = _column_pools(rng, cols)
    headers = [f"f{i:02d}" for i in range(cols - 4)]
    headers += ["app_ver", "signoff_flag", "meter_reading", "row_id"]
    columns = [rng.choices(pool, k=rows) for pool in pools]
    columns.append([str(i + 1) for i in range(rows)])  # contiguous id
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(headers) + "\n")
        for row in zip(*columns):
            fh.write(",".join(row) + "\n")
    return path


def time_scan(path: Path, out: Path) -> float:
    from smelt.cli import main

    start = time.perf_counter()
    code = main(["scan", str(path), "--format", "json", "--output", str(out)])
    elapsed = time.perf_counter() - start
    if code not in (0, 1):
        raise RuntimeError(f"scan failed with status {code}")
    return elapsed


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=100_000)
    parser.add_argument("--cols", type=int, default=30)
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--out", default="/tmp/smelt-bench.csv")
    args = parser.parse_args()

    t0 = time.perf_counter()
    path = generate_csv(args.out, args.rows, args.cols, args.seed)
    gen = time.perf_counter() - t0
    size = path.stat().st_size / 1e6
    print(f"generated {path} ({args.rows} x {args.cols}, {size:.1f} MB) in {gen:.1f}s")

    report = path.with_suffix(".report.json")
    elapsed = time_scan(path, report)
    print(f"scan completed in {elapsed:.2f}s -> {report}")


if __name__ == "__main__":
    main()

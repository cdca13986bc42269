"""Brute-force reference implementations used to check the profiler.

Everything here is written from the textbook definitions with plain
Python arithmetic: no numpy, no shared code with the package under test.
"""

from __future__ import annotations

import math


def mean(values: list[float]) -> float:
    return sum(values) / len(values)


def sample_stddev(values: list[float]) -> float | None:
    n = len(values)
    if n < 2:
        return None
    m = mean(values)
    return math.sqrt(sum((v - m) ** 2 for v in values) / (n - 1))


def quantile(values: list[float], q: float) -> float:
    """Linear interpolation between closest ranks (the type-7 convention)."""
    ordered = sorted(values)
    h = (len(ordered) - 1) * q
    lo = math.floor(h)
    hi = math.ceil(h)
    return ordered[lo] + (h - lo) * (ordered[hi] - ordered[lo])


def pearson(xs: list[float | None], ys: list[float | None]) -> float | None:
    """Textbook pairwise-complete Pearson r; None when undefined."""
    pairs = [
        (x, y) for x, y in zip(xs, ys) if x is not None and y is not None
    ]
    if len(pairs) < 2:
        return None
    px = [p[0] for p in pairs]
    py = [p[1] for p in pairs]
    mx, my = mean(px), mean(py)
    num = sum((x - mx) * (y - my) for x, y in pairs)
    denx = math.sqrt(sum((x - mx) ** 2 for x in px))
    deny = math.sqrt(sum((y - my) ** 2 for y in py))
    if denx == 0.0 or deny == 0.0:
        return None
    return num / (denx * deny)


def duplicate_groups(
    rows: list[tuple], ignore: set[int] = frozenset()
) -> list[tuple[int, tuple[int, ...]]]:
    """O(n^2) pairwise duplicate grouping; returns (representative, members)."""
    keep = [i for i in range(len(rows[0]))] if rows else []
    keep = [i for i in keep if i not in ignore]
    if rows and not keep:
        return []
    assigned: list[int | None] = [None] * len(rows)
    groups: list[list[int]] = []
    for a in range(len(rows)):
        if assigned[a] is not None:
            continue
        members = [a]
        for b in range(a + 1, len(rows)):
            if assigned[b] is not None:
                continue
            if all(rows[a][i] == rows[b][i] for i in keep):
                members.append(b)
        if len(members) >= 2:
            for m in members:
                assigned[m] = len(groups)
            groups.append(members)
    return [(g[0], tuple(g)) for g in groups]

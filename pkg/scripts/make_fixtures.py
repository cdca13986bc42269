#!/usr/bin/env python3
"""Regenerate the CSV fixture corpus under tests/fixtures/.

Every file is deterministic (fixed seeds, no timestamps). For each smell
key there is one positive file where the detector must fire on the
designated column(s) and one negative file where it must not; the script
asserts the load-bearing arithmetic (correlations, fences, fractions)
while writing, so a regenerated corpus cannot silently drift.
"""

from __future__ import annotations

import csv
import math
import random
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
CORPUS = FIXTURES / "corpus"


def write_csv(path: Path, headers: list[str], rows: list[list]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(headers)
        writer.writerows(rows)
    print(f"wrote {path.relative_to(FIXTURES.parent.parent)} ({len(rows)} rows)")


def pearson(xs: list[float], ys: list[float]) -> float:
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    dx = math.sqrt(sum((x - mx) ** 2 for x in xs))
    dy = math.sqrt(sum((y - my) ** 2 for y in ys))
    return num / (dx * dy)


def note_column(n: int) -> list[str]:
    """n almost-distinct free-text values: keeps rows unique without
    introducing an all-distinct (identifier-smelling) column."""
    notes = [f"note {i}" for i in range(n)]
    notes[-1] = "note 0"
    return notes


def red_corr() -> None:
    xs = [i for i in range(1, 21) for _ in (0, 1)]  # 1,1,2,2,...,20,20
    ys = [2 * x + 1 for x in xs]
    tags = ["a", "b"] * 20
        # fixed shuffle of ys for the negative file
    rng = random.Random(20240817)
    ys_shuffled = ys[:]
    rng.shuffle(ys_shuffled)
    r = pearson([float(x) for x in xs], [float(y) for y in ys_shuffled])
    assert abs(r) < 0.6, f"shuffled correlation too high: {r}"
    write_csv(
        CORPUS / "red-corr_pos.csv",
        ["x", "y", "tag"],
        [[x, y, t] for x, y, t in zip(xs, ys, tags)],
    )
    write_csv(
        CORPUS / "red-corr_neg.csv",
        ["x", "y", "tag"],
        [[x, y, t] for x, y, t in zip(xs, ys_shuffled, tags)],
    )


def red_uid() -> None:
    n = 50
    grades = [["A", "B", "C", "D", "E"][i % 5] for i in range(n)]
    notes = note_column(n)
    pos_ids = list(range(1, n + 1))
    neg_ids = pos_ids[:]
    neg_ids[-1] = 1  # one repeated id: no longer a unique identifier
    write_csv(
        CORPUS / "red-uid_pos.csv",
        ["record_id", "grade", "remark"],
        list(zip(pos_ids, grades, notes)),
    )
    write_csv(
        CORPUS / "red-uid_neg.csv",
        ["record_id", "grade", "remark"],
        list(zip(neg_ids, grades, notes)),
    )


def red_dup() -> None:
    # 28 rows (< corr_min_pairs, so the numeric pair cannot fire red-corr)
    rng = random.Random(7)
    base = []
    species = ["setina", "verdana", "coralis"]
    for i in range(25):
        base.append(
            [
                round(4.0 + (i * 13 % 17) * 0.1, 1),
                round(2.0 + (i * 7 % 11) * 0.1, 1),
                species[i % 3],
            ]
        )
    assert len({tuple(r) for r in base}) == 25
    dup_rows = [base[3][:], base[10][:], base[17][:]]  # three exact repeats
    pos = base + dup_rows
    rng.shuffle(pos)
    neg = base[:3] + base[5:]  # 23 distinct rows, no repeats
    write_csv(CORPUS / "red-dup_pos.csv", ["sepal_l", "sepal_w", "species"], pos)
    write_csv(CORPUS / "red-dup_neg.csv", ["sepal_l", "sepal_w", "species"], neg)


def cat_hierarchy() -> None:
    n = 60
    races = [
        ["white", "black", "asian", "amerindian", "other"][i % 5]
        for i in range(n)
    ]
    depts = [["sales", "support", "ops", "hq"][i % 4] for i in range(n)]
    educations = [
        [
            "primary", "secondary", "vocational", "bachelors", "masters",
            "doctorate", "informal",
        ][i % 7]
        for i in range(n)
    ]
    scores = [[1, 2, 3, 4, 5][i % 5] for i in range(n)]
    notes = note_column(n)
    write_csv(
        CORPUS / "cat-hierarchy_pos.csv",
        ["race", "dept", "remark"],
        list(zip(races, depts, notes)),
    )
    write_csv(
        CORPUS / "cat-hierarchy_neg.csv",
        ["education", "score", "remark"],
        list(zip(educations, scores, notes)),
    )


def cat_bin() -> None:
    n = 120
    pos_districts = []
    for d in range(1, 11):
        pos_districts += [f"D{d:02d}"] * 10  # ten common districts
    for d in range(11, 16):
        pos_districts += [f"D{d:02d}"] * 2  # five uncommon
    for d in range(16, 26):
        pos_districts += [f"D{d:02d}"]  # ten singletons
    assert len(pos_districts) == n and len(set(pos_districts)) == 25
    neg_districts = [f"D{(i % 12) + 1:02d}" for i in range(n)]
    notes = note_column(n)
    write_csv(
        CORPUS / "cat-bin_pos.csv",
        ["district", "remark"],
        list(zip(pos_districts, notes)),
    )
    write_csv(
        CORPUS / "cat-bin_neg.csv",
        ["district", "remark"],
        list(zip(neg_districts, notes)),
    )


def misc_sensitive() -> None:
    n = 40
    sexes = [["M", "F"][i % 2] for i in range(n)]
    countries = [
        ["peru", "norway", "kenya", "vietnam", "canada"][i % 5]
        for i in range(n)
    ]
    cities = [["north", "south", "east", "west"][i % 4] for i in range(n)]
    readings = [round(3.0 + ((i * 11) % 23) * 0.37, 2) for i in range(n)]
    messages = [f"routine entry {i % 13}" for i in range(n)]
    notes = note_column(n)
    write_csv(
        CORPUS / "misc-sensitive_pos.csv",
        ["sex", "Native_Country", "city", "remark"],
        list(zip(sexes, countries, cities, notes)),
    )
    write_csv(
        CORPUS / "misc-sensitive_neg.csv",
        ["sextant_reading", "message", "city", "remark"],
        list(zip(readings, messages, cities, notes)),
    )


def misc_balance() -> None:
    n = 100
    rng = random.Random(11)
    amounts = [round(rng.uniform(5.0, 500.0), 2) for _ in range(n)]
    assert len(set(amounts)) == n  # floats: never identifier-flagged
    pos_classes = [0] * 97 + [1] * 3
    rng.shuffle(pos_classes)
    minority = pos_classes.count(1) / n
    assert minority < 0.10 * (1 / 2), minority
    r = pearson([float(c) for c in pos_classes], amounts)
    assert abs(r) < 0.5, r
    neg_classes = [0] * 60 + [1] * 40
    rng.shuffle(neg_classes)
    write_csv(
        CORPUS / "misc-balance_pos.csv",
        ["class", "amount"],
        list(zip(pos_classes, amounts)),
    )
    write_csv(
        CORPUS / "misc-balance_neg.csv",
        ["class", "amount"],
        list(zip(neg_classes, amounts)),
    )


def misc_unit() -> None:
    # 25 rows: below corr_min_pairs, so the two quantities cannot fire red-corr
    n = 25
    rng = random.Random(13)
    radii = [round(rng.uniform(5.0, 30.0), 2) for _ in range(n)]
    perimeters = [round(rng.uniform(20.0, 200.0), 2) for _ in range(n)]
    labels = [["benign", "solid", "cystic"][i % 3] for i in range(n)]
    write_csv(
        CORPUS / "misc-unit_pos.csv",
        ["radius", "perimeter", "kind"],
        list(zip(radii, perimeters, labels)),
    )
    write_csv(
        CORPUS / "misc-unit_neg.csv",
        ["radius_mm", "duration (min)", "kind"],
        list(zip(radii, perimeters, labels)),
    )


def miss_null() -> None:
    n = 60
    refs = note_column(n)
    remarks = []
    for i in range(n):
        if i % 2 == 0:
            remarks.append("")  # null token: missing
        else:
            remarks.append(["pending", "done", "queued"][i % 3])
    filled = [["pending", "done", "queued"][i % 3] for i in range(n)]
    write_csv(
        CORPUS / "miss-null_pos.csv",
        ["ref", "remark"],
        list(zip(refs, remarks)),
    )
    write_csv(
        CORPUS / "miss-null_neg.csv",
        ["ref", "remark"],
        list(zip(refs, filled)),
    )


def miss_sp_val() -> None:
    n = 100
    rng = random.Random(17)
    jobs = ["clerk", "farmer", "teacher", "driver", "nurse"]
    pos_employment = [jobs[i % 5] for i in range(95)] + ["?"] * 5
    rng.shuffle(pos_employment)
    pos_reading = [rng.randint(0, 100) for _ in range(98)] + [-9999, -9999]
    rng.shuffle(pos_reading)
    # fence check: 3*IQR fences of the non-sentinel values must exclude -9999
    rest = sorted(v for v in pos_reading if v != -9999)

    def quantile(sorted_vals: list[float], q: float) -> float:
        h = (len(sorted_vals) - 1) * q
        lo = math.floor(h)
        hi = math.ceil(h)
        return sorted_vals[lo] + (h - lo) * (sorted_vals[hi] - sorted_vals[lo])

    q1, q3 = quantile(rest, 0.25), quantile(rest, 0.75)
    assert -9999 < q1 - 3 * (q3 - q1), (q1, q3)

    neg_employment = [jobs[i % 5] for i in range(n)]
    neg_reading = [rng.randint(-10000, 10000) for _ in range(98)] + [-9999]
    neg_reading.append(neg_reading[0])  # one repeat: not an identifier column
    rng.shuffle(neg_reading)
    rest = sorted(v for v in neg_reading if v != -9999)
    q1, q3 = quantile(rest, 0.25), quantile(rest, 0.75)
    assert q1 - 3 * (q3 - q1) <= -9999 <= q3 + 3 * (q3 - q1), (q1, q3)
    notes = note_column(n)
    write_csv(
        CORPUS / "miss-sp-val_pos.csv",
        ["employment", "reading", "remark"],
        list(zip(pos_employment, pos_reading, notes)),
    )
    write_csv(
        CORPUS / "miss-sp-val_neg.csv",
        ["employment", "reading", "remark"],
        list(zip(neg_employment, neg_reading, notes)),
    )


def miss_bin() -> None:
    n = 60
    depts = [["sales", "support", "ops"][i % 3] for i in range(n)]
    notes = note_column(n)
    pos_flags = ["Y" if i % 10 == 0 else "" for i in range(n)]  # 6 Y, 54 missing
    assert pos_flags.count("Y") == 6
    neg_flags = [("Y" if i % 20 == 0 else "N") if i % 10 in (0, 5) else "" for i in range(n)]
    present = [f for f in neg_flags if f]
    assert set(present) == {"Y", "N"} and len(present) == 12
    write_csv(
        CORPUS / "miss-bin_pos.csv",
        ["approval_flag", "dept", "remark"],
        list(zip(pos_flags, depts, notes)),
    )
    write_csv(
        CORPUS / "miss-bin_neg.csv",
        ["approval_flag", "dept", "remark"],
        list(zip(neg_flags, depts, notes)),
    )


def str_num() -> None:
    n = 40
    versions = [
        ["1.0.3", "1.1.9", "2.0.1", "2.3.4", "3.0.0"][i % 5] for i in range(n)
    ]
    counts = [[3, 5, 8][i % 3] for i in range(n)]
    comments = [
        [
            "needs a second review",
            "was fine on arrival",
            "waiting for parts",
            "customer called twice",
            "closed without action",
        ][i % 5]
        for i in range(n)
    ]
    notes = note_column(n)
    write_csv(
        CORPUS / "str-num_pos.csv",
        ["build_ver", "retries", "remark"],
        list(zip(versions, counts, notes)),
    )
    write_csv(
        CORPUS / "str-num_neg.csv",
        ["comment", "retries", "remark"],
        list(zip(comments, counts, notes)),
    )


def str_sanitise() -> None:
    n = 30
    padded = [[" M", "F ", " I ", "M", "F", "I"][i % 6] for i in range(n)]
    clean = [["setina", "verdana", "coralis"][i % 3] for i in range(n)]
    notes = note_column(n)
    write_csv(
        CORPUS / "str-sanitise_pos.csv",
        ["sex", "remark"],
        list(zip(padded, notes)),
    )
    write_csv(
        CORPUS / "str-sanitise_neg.csv",
        ["species", "remark"],
        list(zip(clean, notes)),
    )


def str_human() -> None:
    n = 20
    minutes = [f"{85 + 3 * i} min" for i in range(10)]
    seasons = [f"{i + 1} Seasons" if i else "1 Season" for i in range(9)]
    pos_durations = minutes + seasons + ["1 Season"]  # repeat: not all-distinct
    kinds = ["Movie"] * 10 + ["TV Show"] * 10
    neg_durations = [f"{80 + 2 * i} min" for i in range(19)] + ["80 min"]
    notes = note_column(n)
    write_csv(
        CORPUS / "str-human_pos.csv",
        ["content", "duration", "remark"],
        list(zip(kinds, pos_durations, notes)),
    )
    write_csv(
        CORPUS / "str-human_neg.csv",
        ["content", "duration", "remark"],
        list(zip(kinds, neg_durations, notes)),
    )


def dataset_style_fixtures() -> None:
    # streaming catalog excerpt: movie durations in minutes, shows in seasons
    rows = [
        ["Movie", "90 min"],
        ["TV Show", "2 Seasons"],
        ["TV Show", "1 Season"],
        ["TV Show", "1 Season"],
        ["TV Show", "2 Seasons"],
        ["TV Show", "1 Season"],
        ["Movie", "91 min"],
        ["Movie", "125 min"],
        ["TV Show", "9 Seasons"],
        ["Movie", "104 min"],
    ]
    write_csv(FIXTURES / "streaming_catalog.csv", ["type", "duration"], rows)

    # census-style sample: '?' sentinels wrapped in whitespace, padded labels
    n = 50
    rng = random.Random(19)
    ages = [rng.randint(17, 80) for _ in range(n)]
    workclasses = []
    for i in range(n):
        if i % 10 == 0:
            workclasses.append(" ?")
        else:
            workclasses.append(
                [" Private", " Self-emp", " State-gov", "Private"][i % 4]
            )
    occupations = [
        ["craft", "sales", "tech", "admin", "transport"][i % 5]
        for i in range(n)
    ]
    write_csv(
        FIXTURES / "census_sample.csv",
        ["age", "workclass", "occupation"],
        list(zip(ages, workclasses, occupations)),
    )

    # building-permit style: two mostly-missing all-'Y' flag columns
    n = 60
    sites = [["downtown", "harbor", "midtown"][i % 3] for i in range(n)]
    notif = ["Y" if i % 10 == 3 else "" for i in range(n)]
    compliance = ["Y" if i % 10 == 7 else "" for i in range(n)]
    assert notif.count("Y") == 6 and compliance.count("Y") == 6
    write_csv(
        FIXTURES / "building_permits.csv",
        ["permit_no", "structural_notification", "tidf_compliance", "site"],
        [
            [1000 + i, notif[i], compliance[i], sites[i]]
            for i in range(n)
        ],
    )

    # abalone-style sex column with stray whitespace
    n = 30
    sexes = [[" M", "F ", " I ", "M", "F", "I"][i % 6] for i in range(n)]
    rings = [[6, 9, 11, 14][i % 4] for i in range(n)]
    write_csv(
        FIXTURES / "abalone_sex.csv",
        ["sex", "rings"],
        list(zip(sexes, rings)),
    )

    # clean control table: nothing to report (9 rows keeps the row-id column
    # under the identifier minimum)
    n = 9
    rows = [
        [i + 1, ["alpha", "beta", "gamma"][i % 3], [4.2, 5.8, 3.9][i % 3]]
        for i in range(n)
    ]
    write_csv(FIXTURES / "clean.csv", ["seq", "level", "value"], rows)


def main() -> None:
    red_corr()
    red_uid()
    red_dup()
    cat_hierarchy()
    cat_bin()
    misc_sensitive()
    misc_balance()
    misc_unit()
    miss_null()
    miss_sp_val()
    miss_bin()
    str_num()
    str_sanitise()
    str_human()
    dataset_style_fixtures()


if __name__ == "__main__":
    main()

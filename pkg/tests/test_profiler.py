import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smelt import (
    InferredType,
    ScanConfig,
    detect_str_patterns,
    find_duplicate_rows,
    pearson,
    profile_column,
    profile_table,
)
from smelt.profiler import (
    FORMATTED_NUM,
    NUM_WITH_UNIT,
    OTHER,
    PURE_NUM,
    VERSION,
    classify_token,
    uid_confidence,
)
from conftest import parse_text, table_from_columns
import oracles

CFG = ScanConfig()


def column_profile(values, name="v"):
    typed = table_from_columns({name: values})
    return profile_column(typed, 0, CFG)


class TestColumnProfile:
    def test_descriptive_stats_against_oracle_example(self):
        col = column_profile(["1", "2", "3", "4"])
        assert col.numeric.mean == pytest.approx(2.5, abs=1e-12)
        assert col.numeric.q1 == pytest.approx(1.75, abs=1e-12)
        assert col.numeric.q2 == pytest.approx(2.5, abs=1e-12)
        assert col.numeric.q3 == pytest.approx(3.25, abs=1e-12)
        # oracle: sqrt(((1-2.5)^2+...+(4-2.5)^2)/3)
        assert col.numeric.stddev == pytest.approx(1.2909944487358056, abs=1e-12)

    def test_all_missing_column(self):
        col = column_profile([None, None, None])
        assert col.missing_count == col.row_count == 3
        assert col.non_missing_count == 0
        assert col.numeric is None

    def test_constant_column(self):
        col = column_profile(["5", "5", "5"])
        assert col.numeric.stddev == 0.0
        assert col.distinct_count == 1

    def test_stddev_absent_for_single_value(self):
        col = column_profile(["5"])
        assert col.numeric.stddev is None
        assert col.numeric.mean == 5.0

    def test_stats_skip_missing_cells(self):
        col = column_profile(["1", None, "3", None])
        assert col.missing_count == 2
        assert col.numeric.mean == 2.0

    def test_top_values_ties_broken_lexicographically(self):
        col = column_profile(["b", "a", "c", "a", "b", "c"])
        assert col.top_values == (("a", 2), ("b", 2), ("c", 2))

    def test_quartile_ordering_invariant(self):
        col = column_profile([str(v) for v in [9, 1, 4, 4, 7, 2, 8]])
        n = col.numeric
        assert n.minimum <= n.q1 <= n.q2 <= n.q3 <= n.maximum

    def test_singleton_count(self):
        col = column_profile(["a", "a", "b", "c"])
        assert col.singleton_count == 2

    def test_string_stats_whitespace_and_casefold(self):
        col = column_profile([" M", "F ", " I ", "M", "F", "I"])
        assert col.strings.whitespace_affected_count == 3
        assert col.distinct_count == 6
        assert col.strings.distinct_after_trim_casefold == 3

    def test_is_categorical_string_heuristic(self):
        few = column_profile(["a", "b", "c"] * 10)
        assert few.is_categorical
        many = column_profile([f"v{i}" for i in range(30)])
        assert not many.is_categorical

    def test_boolean_is_categorical(self):
        col = column_profile(["yes", "no", "yes"])
        assert col.inferred_type is InferredType.BOOLEAN
        assert col.is_categorical

    def test_numeric_never_categorical(self):
        col = column_profile(["1", "2", "1", "2"])
        assert col.inferred_type is InferredType.INTEGER
        assert not col.is_categorical


class TestPearson:
    def test_self_correlation(self):
        r, n = pearson([1.0, 2.0, 5.0], [1.0, 2.0, 5.0])
        assert n == 3
        assert abs(r - 1.0) <= 1e-12

    def test_exact_linear_relation(self):
        r, _ = pearson([1, 2, 3], [2, 4, 6])
        assert r == pytest.approx(1.0, abs=1e-12)

    def test_textbook_example_frozen_from_oracle(self):
        # oracle value computed independently before the build
        expected = 0.8315218406202998
        assert oracles.pearson([1, 2, 3, 4], [1, 3, 2, 5]) == pytest.approx(
            expected, abs=1e-15
        )
        r, n = pearson([1, 2, 3, 4], [1, 3, 2, 5])
        assert n == 4
        assert r == pytest.approx(expected, abs=1e-12)

    def test_pairwise_complete_masking(self):
        r, n = pearson([1, None, 2, 3, 4], [1, 9.5, 3, 2, 5])
        assert n == 4
        assert r == pytest.approx(0.8315218406202998, abs=1e-12)

    def test_degenerate_cases(self):
        assert pearson([1], [2]) == (None, 1)
        assert pearson([1, 1, 1], [1, 2, 3]) == (None, 3)
        assert pearson([None, 1], [2, None]) == (None, 0)

    def test_numeric_strings_accepted(self):
        r, _ = pearson(["1", "2", "3"], ["2", "4", "6"])
        assert r == pytest.approx(1.0, abs=1e-12)

    @given(
        st.lists(
            st.tuples(
                st.floats(-1e6, 1e6, allow_nan=False),
                st.floats(-1e6, 1e6, allow_nan=False),
            ),
            min_size=2,
            max_size=50,
        )
    )
    def test_symmetry_and_oracle_agreement(self, pairs):
        xs = [p[0] for p in pairs]
        ys = [p[1] for p in pairs]
        r_xy, n_xy = pearson(xs, ys)
        r_yx, n_yx = pearson(ys, xs)
        assert n_xy == n_yx
        expected = oracles.pearson(xs, ys)
        if expected is None:
            assert r_xy is None
        else:
            expected = max(-1.0, min(1.0, expected))
            assert r_xy == pytest.approx(expected, abs=1e-9)
            assert r_yx == pytest.approx(expected, abs=1e-9)

    @given(
        st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=3, max_size=40),
        st.floats(-50, 50, allow_nan=False).filter(lambda a: abs(a) > 1e-3),
        st.floats(-50, 50, allow_nan=False),
    )
    def test_scale_sign_invariance(self, xs, a, b):
        ys = [(i * 13) % 7 + 0.5 * i for i in range(len(xs))]
        base, _ = pearson(xs, ys)
        scaled, _ = pearson([a * x + b for x in xs], ys)
        if base is None:
            assert scaled is None
        else:
            assert scaled == pytest.approx(math.copysign(1.0, a) * base, abs=1e-9)


class TestDuplicates:
    def test_single_pair(self):
        typed = table_from_columns(
            {"a": ["1", "2", "1", "3"], "b": ["x", "y", "x", "z"]}
        )
        groups = find_duplicate_rows(typed)
        assert len(groups) == 1
        assert groups[0].rows == (0, 2)
        assert groups[0].representative == 0

    def test_all_distinct(self):
        typed = table_from_columns({"a": ["1", "2", "3"]})
        assert find_duplicate_rows(typed) == ()

    def test_group_sizes_match_pairwise_oracle(self):
        rows = [["a", "1"]] * 4 + [["b", "2"]] * 2 + [["c", "3"]]
        random.Random(3).shuffle(rows)
        typed = table_from_columns(
            {
                "x": [r[0] for r in rows],
                "y": [r[1] for r in rows],
            }
        )
        groups = find_duplicate_rows(typed)
        oracle = oracles.duplicate_groups([tuple(r) for r in rows])
        assert [(g.representative, g.rows) for g in groups] == oracle
        assert sorted(len(g.rows) for g in groups) == [2, 4]

    def test_missing_matches_missing(self):
        typed = table_from_columns({"a": [None, None], "b": ["x", "x"]})
        groups = find_duplicate_rows(typed)
        assert groups[0].rows == (0, 1)

    def test_ignore_columns(self):
        typed = table_from_columns(
            {"id": ["1", "2"], "v": ["same", "same"]}
        )
        assert find_duplicate_rows(typed) == ()
        groups = find_duplicate_rows(typed, ignore_columns={0})
        assert groups[0].rows == (0, 1)

    def test_all_columns_ignored_yields_nothing(self):
        typed = table_from_columns({"id": ["1", "2"]})
        assert find_duplicate_rows(typed, ignore_columns={0}) == ()

    @given(
        st.lists(
            st.tuples(
                st.sampled_from(["a", "b", None]),
                st.sampled_from(["1", "2"]),
            ),
            min_size=1,
            max_size=24,
        )
    )
    def test_matches_oracle_on_small_tables(self, rows):
        typed = table_from_columns(
            {
                "x": [r[0] for r in rows],
                "y": [r[1] for r in rows],
            }
        )
        got = [(g.representative, g.rows) for g in find_duplicate_rows(typed)]
        assert got == oracles.duplicate_groups(rows)


class TestPatternCensus:
    @pytest.mark.parametrize(
        "token,expected",
        [
            ("1.1.9", VERSION),
            ("10.2.3.4", VERSION),
            ("90 min", NUM_WITH_UNIT),
            ("2 Seasons", NUM_WITH_UNIT),
            ("$5", NUM_WITH_UNIT),
            ("€1,200", NUM_WITH_UNIT),
            ("45%", NUM_WITH_UNIT),
            ("45 %", NUM_WITH_UNIT),
            ("1,234", FORMATTED_NUM),
            ("-12,345.67", FORMATTED_NUM),
            ("3e2", PURE_NUM),
            ("-4.5", PURE_NUM),
            ("90min", OTHER),
            ("5 square meters", OTHER),
            ("hello", OTHER),
            ("1..2", OTHER),
        ],
    )
    def test_classification(self, token, expected):
        assert classify_token(token)[0] == expected

    def test_unit_words_casefolded_and_singularized(self):
        assert classify_token("2 Seasons")[1] == "season"
        assert classify_token("1 Season")[1] == "season"
        assert classify_token("90 min")[1] == "min"
        assert classify_token("5 s")[1] == "s"  # never stripped to empty

    def test_census_counts_and_units(self):
        census = detect_str_patterns(
            ["90 min", "2 Seasons", None, "1 Season", "hello"]
        )
        assert census.counts[NUM_WITH_UNIT] == 3
        assert census.counts[OTHER] == 1
        assert census.unit_words == ("min", "season")
        assert census.classified == 3

    def test_dominant_class(self):
        census = detect_str_patterns(["1.1.9", "1.2.0", "7"])
        assert census.dominant() == VERSION


class TestUidRule:
    def test_contiguous_integer_high(self):
        col = column_profile([str(i) for i in range(1, 101)], name="recno")
        assert uid_confidence(col, CFG) == ("high", "contiguous integer sequence")

    def test_name_match_high(self):
        col = column_profile([str(i * 3) for i in range(20)], name="host_id")
        assert uid_confidence(col, CFG) == ("high", "key-like name")

    def test_duplicates_disqualify(self):
        values = [str(i) for i in range(20)] + ["0"]
        col = column_profile(values, name="host_id")
        assert uid_confidence(col, CFG) is None

    def test_floats_never_flagged(self):
        col = column_profile([f"{i}.5" for i in range(100)], name="measurement")
        assert uid_confidence(col, CFG) is None

    def test_missing_disqualifies(self):
        values = [str(i) for i in range(20)]
        col = column_profile(values[:-1] + [None], name="id")
        assert uid_confidence(col, CFG) is None

    def test_short_tables_exempt(self):
        col = column_profile([str(i) for i in range(1, 10)], name="id")
        assert uid_confidence(col, CFG) is None

    def test_distinct_strings_medium(self):
        col = column_profile([f"u{i * 7}" for i in range(30)], name="token")
        assert uid_confidence(col, CFG) == ("medium", "all values distinct")


class TestTableProfile:
    def test_correlation_entries_cover_valid_numeric_pairs(self):
        typed = table_from_columns(
            {
                "a": ["1", "2", "3", "4"],
                "b": ["2", "4", "6", "8"],
                "c": ["5", "5", "5", "5"],  # constant: no entry
                "s": ["x", "y", "x", "y"],
            }
        )
        profile = profile_table(typed, CFG)
        pairs = {(e.i, e.j) for e in profile.correlation_entries}
        assert pairs == {(0, 1)}
        entry = profile.correlation_entries[0]
        assert abs(entry.r) <= 1.0 + 1e-12
        assert entry.n_pairs == 4

    def test_boolean_columns_never_correlate(self):
        typed = table_from_columns(
            {
                "a": ["1", "2", "3", "4"],
                "flag": ["yes", "no", "yes", "no"],
            }
        )
        profile = profile_table(typed, CFG)
        assert profile.correlation_entries == ()

    def test_duplicate_groups_exclude_high_confidence_uids(self):
        typed = table_from_columns(
            {
                "id": [str(i) for i in range(1, 13)],
                "v": ["a"] * 6 + ["b"] * 6,
            }
        )
        profile = profile_table(typed, CFG)
        assert len(profile.duplicate_groups) == 2
        assert {len(g.rows) for g in profile.duplicate_groups} == {6}

    def test_permutation_stability(self):
        values = [str((i * 7) % 5) for i in range(40)]
        labels = [["x", "y", "z"][i % 3] for i in range(40)]
        typed = table_from_columns({"v": values, "l": labels})
        base = profile_table(typed, CFG)
        order = list(range(40))
        random.Random(9).shuffle(order)
        shuffled = table_from_columns(
            {
                "v": [values[i] for i in order],
                "l": [labels[i] for i in order],
            }
        )
        perm = profile_table(shuffled, CFG)
        for one, two in zip(base.columns, perm.columns):
            assert one.top_values == two.top_values
            assert one.distinct_count == two.distinct_count
            assert one.numeric == two.numeric

    def test_profiling_is_reproducible(self):
        typed = parse_text("a,b\n1,x\n2,y\n1,\n")
        assert profile_table(typed, CFG) == profile_table(typed, CFG)

    def test_sentinel_fences_exclude_candidate(self):
        values = [str(v) for v in range(0, 98)] + ["-9999", "-9999"]
        col = column_profile(values, name="reading")
        assert len(col.sentinel_hits) == 1
        hit = col.sentinel_hits[0]
        assert hit.value == -9999.0
        assert hit.count == 2
        rest = [float(v) for v in range(0, 98)]
        q1 = oracles.quantile(rest, 0.25)
        q3 = oracles.quantile(rest, 0.75)
        assert hit.fence_low == pytest.approx(q1 - 3 * (q3 - q1), abs=1e-9)
        assert hit.fence_high == pytest.approx(q3 + 3 * (q3 - q1), abs=1e-9)

    def test_sentinel_detected_in_float_form(self):
        values = ["1.5", "2.5", "3.5", "-9999.0"]
        col = column_profile(values, name="reading")
        assert [h.token for h in col.sentinel_hits] == ["-9999"]

    def test_warnings_propagate(self):
        typed = parse_text("a,b\n1\n2,3\n")
        profile = profile_table(typed, CFG)
        assert any("ragged" in w for w in profile.warnings)


class TestStatisticsOracleSmall:
    """Spot version of the acceptance oracle run (small, fast)."""

    def test_random_tables_match_oracles(self):
        rng = random.Random(42)
        for _ in range(10):
            n = rng.randint(2, 120)
            xs = [
                None if rng.random() < 0.15 else rng.uniform(-100, 100)
                for _ in range(n)
            ]
            ys = [
                None if rng.random() < 0.15 else rng.uniform(-100, 100)
                for _ in range(n)
            ]
            typed = table_from_columns(
                {
                    "x": [None if v is None else repr(v) for v in xs],
                    "y": [None if v is None else repr(v) for v in ys],
                }
            )
            profile = profile_table(typed, CFG)
            col = profile.columns[0]
            present = [v for v in xs if v is not None]
            if present:
                assert col.numeric.mean == pytest.approx(
                    oracles.mean(present), abs=1e-9
                )
                for q, attr in ((0.25, "q1"), (0.5, "q2"), (0.75, "q3")):
                    assert getattr(col.numeric, attr) == pytest.approx(
                        oracles.quantile(present, q), abs=1e-9
                    )
                expected_sd = oracles.sample_stddev(present)
                if expected_sd is None:
                    assert col.numeric.stddev is None
                else:
                    assert col.numeric.stddev == pytest.approx(
                        expected_sd, abs=1e-9
                    )
            expected_r = oracles.pearson(xs, ys)
            got = {
                (e.i, e.j): e.r for e in profile.correlation_entries
            }.get((0, 1))
            if expected_r is None:
                assert got is None
            else:
                assert got == pytest.approx(expected_r, abs=1e-9)

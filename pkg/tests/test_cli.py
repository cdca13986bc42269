import json

import jsonschema

from smelt.cli import main
from conftest import CORPUS, FIXTURES
from test_report import load_schema


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def scan_json(capsys, *argv):
    code, out, err = run(capsys, "scan", "--format", "json", *argv)
    return code, json.loads(out) if out.strip() else None, err


class TestScan:
    def test_clean_file_exits_zero(self, capsys):
        code, out, _ = run(capsys, "scan", str(FIXTURES / "clean.csv"))
        assert code == 0
        assert "no data smells detected" in out

    def test_smelly_file_exits_one(self, capsys):
        code, out, _ = run(capsys, "scan", str(CORPUS / "red-corr_pos.csv"))
        assert code == 1
        assert "red-corr" in out

    def test_fail_on_error_ignores_warnings(self, capsys):
        code, _, _ = run(
            capsys, "scan", str(CORPUS / "red-corr_pos.csv"),
            "--fail-on", "error",
        )
        assert code == 0

    def test_fail_on_never(self, capsys):
        code, _, _ = run(
            capsys, "scan", str(CORPUS / "miss-sp-val_pos.csv"),
            "--fail-on", "never",
        )
        assert code == 0

    def test_fail_on_error_catches_errors(self, capsys):
        code, _, _ = run(
            capsys, "scan", str(CORPUS / "miss-sp-val_pos.csv"),
            "--fail-on", "error",
        )
        assert code == 1

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run(capsys, "scan", "/nonexistent/nope.csv")
        assert code == 2
        assert "nope.csv" in err

    def test_malformed_csv_exits_two(self, capsys, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text('a,b\n1,"broken\n')
        code, _, err = run(capsys, "scan", str(bad))
        assert code == 2
        assert "byte offset" in err

    def test_empty_table_exits_two(self, capsys, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("a,b\n")
        code, _, err = run(capsys, "scan", str(empty))
        assert code == 2
        assert "no data rows" in err

    def test_multi_file_partial_failure(self, capsys, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text('a\n"unfinished\n')
        code, out, err = run(
            capsys, "scan", str(FIXTURES / "clean.csv"), str(bad)
        )
        assert code == 2
        assert "clean.csv" in out  # report for the good file still rendered
        assert "bad.csv" in err

    def test_json_single_file_is_object(self, capsys):
        code, doc, _ = scan_json(capsys, str(FIXTURES / "clean.csv"))
        assert code == 0
        assert isinstance(doc, dict)
        assert doc["schema"] == "smelt/1"
        assert doc["findings"] == []

    def test_json_multi_file_is_array(self, capsys):
        code, doc, _ = scan_json(
            capsys, str(FIXTURES / "clean.csv"), str(CORPUS / "red-corr_pos.csv")
        )
        assert code == 1
        assert isinstance(doc, list) and len(doc) == 2

    def test_json_validates_against_schema(self, capsys):
        _, doc, _ = scan_json(capsys, str(FIXTURES / "census_sample.csv"))
        jsonschema.validate(doc, load_schema("report.schema.json"))

    def test_output_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "scan", "--format", "json",
            "--output", str(target), str(FIXTURES / "clean.csv"),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["schema"] == "smelt/1"

    def test_determinism_byte_identical(self, capsys):
        _, one, _ = run(
            capsys, "scan", "--format", "json", str(FIXTURES / "census_sample.csv")
        )
        _, two, _ = run(
            capsys, "scan", "--format", "json", str(FIXTURES / "census_sample.csv")
        )
        assert one == two


class TestScanConfigFlags:
    def test_disable_removes_exactly_one_key(self, capsys):
        path = str(FIXTURES / "building_permits.csv")
        _, full, _ = scan_json(capsys, path)
        _, ablated, _ = scan_json(capsys, path, "--disable", "miss-bin")
        full_keys = [f["key"] for f in full["findings"]]
        ablated_keys = [f["key"] for f in ablated["findings"]]
        assert "miss-bin" in full_keys
        assert "miss-bin" not in ablated_keys
        # nothing else changes: in particular miss-null must not reappear
        assert [k for k in full_keys if k != "miss-bin"] == ablated_keys

    def test_enable_overrides_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"disabled_smells": ["str-human"]}))
        path = str(FIXTURES / "streaming_catalog.csv")
        _, without, _ = scan_json(capsys, path, "--config", str(cfg))
        assert "str-human" not in [f["key"] for f in without["findings"]]
        _, with_enable, _ = scan_json(
            capsys, path, "--config", str(cfg), "--enable", "str-human"
        )
        assert "str-human" in [f["key"] for f in with_enable["findings"]]

    def test_unknown_disable_key_exits_two(self, capsys):
        code, _, err = run(
            capsys, "scan", str(FIXTURES / "clean.csv"), "--disable", "bogus"
        )
        assert code == 2
        assert "bogus" in err

    def test_config_file_and_set_precedence(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"corr_threshold": 0.9}))
        _, doc, _ = scan_json(
            capsys, str(FIXTURES / "clean.csv"),
            "--config", str(cfg), "--set", "corr_threshold=0.95",
        )
        assert doc["config"]["corr_threshold"] == 0.95

    def test_config_file_alone(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"corr_threshold": 0.9}))
        _, doc, _ = scan_json(
            capsys, str(FIXTURES / "clean.csv"), "--config", str(cfg)
        )
        assert doc["config"]["corr_threshold"] == 0.9

    def test_unknown_config_field_named_in_error(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"corr_treshold": 0.9}))
        code, _, err = run(
            capsys, "scan", str(FIXTURES / "clean.csv"), "--config", str(cfg)
        )
        assert code == 2
        assert "corr_treshold" in err

    def test_invalid_config_json_exits_two(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{not json")
        code, _, err = run(
            capsys, "scan", str(FIXTURES / "clean.csv"), "--config", str(cfg)
        )
        assert code == 2

    def test_env_var_fallback(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"corr_threshold": 0.33}))
        monkeypatch.setenv("SMELT_CONFIG", str(cfg))
        _, doc, _ = scan_json(capsys, str(FIXTURES / "clean.csv"))
        assert doc["config"]["corr_threshold"] == 0.33

    def test_bad_set_value_exits_two(self, capsys):
        code, _, err = run(
            capsys, "scan", str(FIXTURES / "clean.csv"),
            "--set", "corr_threshold=lots",
        )
        assert code == 2

    def test_set_without_equals_exits_two(self, capsys):
        code, _, _ = run(
            capsys, "scan", str(FIXTURES / "clean.csv"), "--set", "corr_threshold"
        )
        assert code == 2

    def test_threshold_override_changes_findings(self, capsys, tmp_path):
        csv = tmp_path / "gap.csv"
        rows = ["v,w"] + [
            ("," + str(i)) if i % 3 == 0 else (str(i) + "," + str(i))
            for i in range(30)
        ]
        csv.write_text("\n".join(rows) + "\n")
        _, base, _ = scan_json(capsys, str(csv))
        base_keys = [f["key"] for f in base["findings"] if f["columns"] == ["v"]]
        assert "miss-null" in base_keys  # ~33% missing >= default 0.25
        _, strict, _ = scan_json(
            capsys, str(csv), "--set", "missing_fraction_threshold=0.9"
        )
        strict_keys = [
            f["key"] for f in strict["findings"] if f["columns"] == ["v"]
        ]
        assert "miss-null" not in strict_keys


class TestParseFlags:
    def test_max_rows_scans_prefix_only(self, capsys, tmp_path):
        clean_rows = [f"{i % 7},{['a','b'][i % 2]}" for i in range(20)]
        smelly_rows = [",x"] * 30  # heavy missingness beyond the cap
        csv = tmp_path / "grow.csv"
        csv.write_text("n,s\n" + "\n".join(clean_rows) + "\n")
        _, capped_before, _ = scan_json(capsys, str(csv), "--max-rows", "20")
        csv.write_text("n,s\n" + "\n".join(clean_rows + smelly_rows) + "\n")
        _, capped_after, _ = scan_json(capsys, str(csv), "--max-rows", "20")
        assert capped_before["findings"] == capped_after["findings"]
        assert capped_after["rows"] == 20
        _, full, _ = scan_json(capsys, str(csv))
        assert full["rows"] == 50
        assert full["findings"] != capped_after["findings"]

    def test_null_token_replacement(self, capsys, tmp_path):
        csv = tmp_path / "dash.csv"
        csv.write_text("a,b\n" + "\n".join("-,1" for _ in range(20)) + "\n")
        _, base, _ = scan_json(capsys, str(csv))
        assert base["findings"] == [] or all(
            f["key"] != "miss-null" for f in base["findings"]
        )
        _, dashed, _ = scan_json(capsys, str(csv), "--null-token", "-")
        assert any(f["key"] == "miss-null" for f in dashed["findings"])

    def test_no_header_synthesizes_columns(self, capsys, tmp_path):
        csv = tmp_path / "raw.csv"
        csv.write_text("1,a\n2,b\n3,c\n")
        code, out, _ = run(capsys, "profile", str(csv), "--no-header")
        doc = json.loads(out)
        assert [c["name"] for c in doc["columns"]] == ["col_0", "col_1"]
        assert doc["rows"] == 3

    def test_delimiter_flag(self, capsys, tmp_path):
        csv = tmp_path / "semi.csv"
        csv.write_text("a;b\n1;2\n3;4\n")
        code, out, _ = run(capsys, "profile", str(csv), "--delimiter", ";")
        assert json.loads(out)["rows"] == 2

    def test_tab_delimiter_escape(self, capsys, tmp_path):
        csv = tmp_path / "tabs.csv"
        csv.write_text("a\tb\n1\t2\n")
        code, out, _ = run(capsys, "profile", str(csv), "--delimiter", "\\t")
        assert json.loads(out)["rows"] == 1

    def test_bad_delimiter_exits_two(self, capsys):
        code, _, err = run(
            capsys, "scan", str(FIXTURES / "clean.csv"), "--delimiter", "ab"
        )
        assert code == 2


class TestProfileCommand:
    def test_profile_json_validates(self, capsys):
        code, out, _ = run(capsys, "profile", str(FIXTURES / "census_sample.csv"))
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, load_schema("profile.schema.json"))
        workclass = next(c for c in doc["columns"] if c["name"] == "workclass")
        assert workclass["strings"]["whitespace_affected_count"] > 0

    def test_profile_multi_is_array(self, capsys):
        code, out, _ = run(
            capsys, "profile",
            str(FIXTURES / "clean.csv"), str(FIXTURES / "abalone_sex.csv"),
        )
        doc = json.loads(out)
        assert isinstance(doc, list) and len(doc) == 2
        jsonschema.validate(doc, load_schema("profile.schema.json"))

    def test_profile_failure_exits_two(self, capsys):
        code, _, err = run(capsys, "profile", "/nonexistent/x.csv")
        assert code == 2


class TestCatalogueCommands:
    def test_list_text_has_all_fourteen(self, capsys):
        code, out, _ = run(capsys, "list")
        assert code == 0
        for key in (
            "red-corr", "red-dup", "red-uid", "cat-bin", "cat-hierarchy",
            "misc-balance", "misc-sensitive", "misc-unit", "miss-bin",
            "miss-null", "miss-sp-val", "str-human", "str-num", "str-sanitise",
        ):
            assert key in out
        assert out.index("Redundant value smells") < out.index(
            "Categorical value smells"
        )

    def test_list_json(self, capsys):
        code, out, _ = run(capsys, "list", "--format", "json")
        doc = json.loads(out)
        assert len(doc) == 14
        assert doc[0]["key"] == "red-corr"

    def test_explain_known_key(self, capsys):
        code, out, _ = run(capsys, "explain", "miss-bin")
        assert code == 0
        assert "Binary missing values" in out

    def test_explain_unknown_key_exits_two(self, capsys):
        code, _, err = run(capsys, "explain", "bogus")
        assert code == 2
        assert "valid keys" in err

    def test_version_flag(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0
        assert "smelt" in out

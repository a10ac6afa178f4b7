from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from p3walls.cli import _merge_negative_values, main

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


@pytest.fixture(scope="module")
def schemas():
    out = {}
    for path in SCHEMA_DIR.glob("*.json"):
        out[path.stem] = json.loads(path.read_text())
    return out


@pytest.fixture()
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture()
def run_json(run, schemas):
    def _run(schema_name, *argv):
        code, out, err = run(*argv)
        assert code == 0, err
        doc = json.loads(out)
        jsonschema.validate(doc, schemas[schema_name])
        return doc

    return _run


class TestSchemas:
    def test_twelve_schemas_present_and_wellformed(self, schemas):
        assert set(schemas) == {
            "walls",
            "wall-between",
            "bmt-null",
            "q-value",
            "q-restriction",
            "ch3",
            "chi",
            "bott",
            "hyperbola",
            "lambda",
            "scenario-report",
            "diagram",
        }
        for schema in schemas.values():
            jsonschema.Draft202012Validator.check_schema(schema)


class TestWallsCommand:
    def test_json_document(self, run_json):
        doc = run_json(
            "walls", "walls", "--v", "1,0,-5,11", "--beta", "-3", "--ch3", "--json"
        )
        assert doc["character"] == "1,0,-5,11"
        assert doc["beta"] == -3
        assert doc["warnings"] == []
        walls = doc["walls"]
        assert [w["wall"]["center"] for w in walls] == ["-11/2", "-9/2", "-7/2"]
        assert all(w["wall"]["type"] == "semicircle" for w in walls)
        assert [p["sub"] for p in walls[2]["pairs"]] == ["1,-2,2", "1,-1,-3/2"]
        first = walls[2]["pairs"][0]
        assert first["quot"] == "0,2,-7"
        assert first["ch3_candidates"] == ["-11/6", "-4/3"]
        assert all(first["filters"].values())

    def test_cap_warning_fields_in_json(self, run_json):
        doc = run_json(
            "walls", "walls", "--v", "1,0,-5,11", "--beta", "-3", "--amax", "2",
            "--json",
        )
        assert len(doc["walls"]) == 3
        assert [(w["kind"], w["b"], w["a_max"], w["a_needed"]) for w in doc["warnings"]] == [
            ("a_cap_hit", 1, 2, 10),
            ("a_cap_hit", 2, 2, 10),
        ]

    def test_human_output(self, run, monkeypatch):
        monkeypatch.delenv("P3WALLS_ASCII", raising=False)
        code, out, err = run("walls", "--v", "1,0,-5,11", "--beta", "-3")
        assert code == 0
        assert "3 found" in out
        assert "β = -3" in out
        assert "W(-7/2, 3/2)" in out
        assert "sub 1,-2,2  quot 0,2,-7" in out

    def test_ascii_mode(self, run, monkeypatch):
        monkeypatch.setenv("P3WALLS_ASCII", "1")
        code, out, err = run("walls", "--v", "1,0,-5,11", "--beta", "-3")
        assert code == 0
        assert "beta = -3" in out
        assert "β" not in out

    def test_stdout_determinism(self, run):
        first = run("walls", "--v", "1,0,-5,11", "--beta", "-3", "--json")
        second = run("walls", "--v", "1,0,-5,11", "--beta", "-3", "--json")
        assert first == second


class TestGeometryCommands:
    def test_wall_between(self, run_json):
        doc = run_json(
            "wall-between",
            "wall-between", "--v", "1,0,-5,11", "--w", "1,-2,2,-4/3", "--json",
        )
        assert doc["wall"] == {
            "type": "semicircle",
            "center": "-7/2",
            "radius_sq": "9/4",
        }

    def test_bmt_null_semicircle(self, run_json):
        doc = run_json("bmt-null", "bmt-null", "--v", "1,0,-5,11", "--json")
        assert doc["locus"] == {
            "type": "semicircle",
            "center": "-33/10",
            "radius_sq": "89/100",
        }

    def test_bmt_null_empty(self, run_json):
        doc = run_json("bmt-null", "bmt-null", "--v", "1,2,2,4/3", "--json")
        assert doc["locus"] == {"type": "empty"}

    def test_q_at_point(self, run_json):
        doc = run_json(
            "q-value", "q", "--v", "1,0,-5,11", "--at", "-4,6", "--json"
        )
        assert doc == {
            "character": "1,0,-5,11",
            "beta": "-4",
            "alpha_sq": "6",
            "value": "28",
        }

    def test_q_on_wall(self, run_json):
        doc = run_json(
            "q-restriction", "q", "--v", "1,0,-5,11", "--wall", "-7/2,9/4", "--json"
        )
        assert doc["slope"] == "-2"
        assert doc["intercept"] == "0"
        assert doc["beta_min"] == "-5"
        assert doc["beta_max"] == "-2"
        assert doc["endpoints_exact"] is True
        assert doc["sign"] == "nonneg_everywhere"

    def test_q_flags_are_exclusive(self, run, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["q", "--v", "1,0,-5,11", "--at", "-4,6", "--wall", "-7/2,9/4"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_ch3(self, run_json):
        doc = run_json(
            "ch3", "ch3", "--v", "1,0,-5,11", "--sub", "1,-2,2", "--json"
        )
        assert doc["wall"]["center"] == "-7/2"
        assert doc["admissible"] == ["-11/6", "-4/3"]

    def test_ch3_without_semicircle(self, run):
        code, out, err = run("ch3", "--v", "1,0,-5,11", "--sub", "2,0,-10")
        assert code == 1
        assert "no semicircular wall" in err

    def test_hyperbola_branch(self, run_json):
        doc = run_json("hyperbola", "hyperbola", "--v", "1,0,-5,11", "--json")
        assert doc["hyperbola"] == {"type": "branch", "center": "0", "level": "10"}

    def test_hyperbola_vertical(self, run_json):
        doc = run_json("hyperbola", "hyperbola", "--v", "0,2,-7,37/3", "--json")
        assert doc["hyperbola"] == {"type": "vertical_line", "beta": "-7/2"}

    def test_hyperbola_ascii_toggle(self, run, monkeypatch):
        monkeypatch.delenv("P3WALLS_ASCII", raising=False)
        _, greek, _ = run("hyperbola", "--v", "1,0,-5,11")
        assert "β" in greek and "α²" in greek
        monkeypatch.setenv("P3WALLS_ASCII", "1")
        _, plain, _ = run("hyperbola", "--v", "1,0,-5,11")
        assert plain == "(beta - 0)^2 - alpha^2 = 10\n"


class TestNumericCommands:
    def test_chi_single(self, run_json):
        doc = run_json("chi", "chi", "--v", "1,0,-5,11", "--json")
        assert doc == {"character": "1,0,-5,11", "value": "2"}

    def test_chi_pairing_both_directions(self, run_json):
        doc = run_json(
            "chi", "chi", "--v", "0,2,-7,37/3", "--w", "1,-2,2,-4/3", "--json"
        )
        assert doc["value"] == "-12"
        doc = run_json(
            "chi", "chi", "--v", "1,-2,2,-4/3", "--w", "0,2,-7,37/3", "--json"
        )
        assert doc["value"] == "0"

    def test_bott_row(self, run_json):
        doc = run_json("bott", "bott", "--n", "3", "--d", "-4", "--json")
        assert doc == {"n": 3, "d": -4, "h": [0, 0, 0, 1]}

    def test_bott_single(self, run_json):
        doc = run_json("bott", "bott", "--n", "3", "--d", "4", "--i", "0", "--json")
        assert doc == {"n": 3, "d": 4, "i": 0, "value": 35}

    def test_bott_bad_index_is_domain_error(self, run):
        code, out, err = run("bott", "--n", "3", "--d", "0", "--i", "5")
        assert code == 1
        assert "DomainError:" in err

    def test_bott_bad_dimension_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bott", "--n", "4", "--d", "0"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_lambda_value(self, run_json):
        doc = run_json(
            "lambda",
            "lambda", "--v", "0,1,-9/2,61/6", "--at", "-2,1", "--s", "1", "--json",
        )
        assert doc["value"] == "-4/5"

    def test_lambda_infinite(self, run_json):
        doc = run_json(
            "lambda",
            "lambda", "--v", "1,0,-5,11", "--at", "-4,6", "--s", "1", "--json",
        )
        assert doc["value"] == "inf"

    def test_lambda_requires_interior(self, run):
        code, out, err = run("lambda", "--v", "1,0,-5,11", "--at", "-4,0", "--s", "1")
        assert code == 1
        assert "DomainError" in err


class TestScenarioCommand:
    def test_json_to_stdout(self, run, schemas):
        code, out, err = run("scenario", "run", "quintic_g2", "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schemas["scenario-report"])
        assert doc["counts"] == {"walls": 3, "pairs": 4, "components": 6}
        assert [c["total_dim"] for c in doc["components"]] == [20, 21, 21, 21, 20, 27]

    def test_markdown_to_stdout(self, run):
        code, out, err = run("scenario", "run", "quintic_g2")
        assert code == 0
        assert out.startswith("# Component dimension report")
        assert "All 6 expected totals match." in out

    def test_file_outputs(self, run, tmp_path):
        md = tmp_path / "report.md"
        js = tmp_path / "report.json"
        svg = tmp_path / "walls.svg"
        code, out, err = run(
            "scenario", "run", "quintic_g2",
            "--out", str(md), "--json", str(js), "--svg", str(svg),
        )
        assert code == 0
        assert out == f"wrote {md}, {js}, {svg}\n"
        assert md.read_text().startswith("# Component dimension report")
        assert json.loads(js.read_text())["counts"]["walls"] == 3
        assert svg.read_text().startswith("<svg ")

    def test_two_runs_byte_identical(self, run, tmp_path):
        outputs = []
        for tag in ("a", "b"):
            md = tmp_path / f"{tag}.md"
            js = tmp_path / f"{tag}.json"
            svg = tmp_path / f"{tag}.svg"
            code, _, _ = run(
                "scenario", "run", "quintic_g2",
                "--out", str(md), "--json", str(js), "--svg", str(svg),
            )
            assert code == 0
            outputs.append((md.read_bytes(), js.read_bytes(), svg.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_explicit_path_accepted(self, run, tmp_path):
        source = resources.files("p3walls").joinpath("data", "quintic_g2.toml")
        copy = tmp_path / "custom.toml"
        copy.write_text(source.read_text())
        code, out, err = run("scenario", "run", str(copy))
        assert code == 0
        assert "All 6 expected totals match." in out

    def test_unknown_name(self, run):
        code, out, err = run("scenario", "run", "nope")
        assert code == 1
        assert "no scenario file or bundled scenario named 'nope'" in err

    def test_invalid_scenario_is_located(self, run, tmp_path):
        bad = tmp_path / "bad.toml"
        bad.write_text(
            'character = "1,0,-5,11"\nbeta_line = -3\n\n[[walls]]\n'
            'center = "-7/2"\nradius_sq = "9/4"\n\n[[walls.pairs]]\n'
            'sub_label = "A"\nquot_label = "B"\nsub_ch = "1,-2,2,-4/3"\n'
            'quot_ch = "0,2,-7,1/3"\next1_quot_sub = 12\n'
        )
        code, out, err = run("scenario", "run", str(bad))
        assert code == 1
        assert "ScenarioValidationError: scenario.walls[0].pairs[0]" in err


class TestDiagramCommand:
    def test_json_and_file(self, run_json, tmp_path):
        out_file = tmp_path / "diagram.svg"
        doc = run_json(
            "diagram",
            "diagram", "--v", "1,0,-5,11", "--window", "-12,0,6",
            "--out", str(out_file), "--json",
        )
        assert doc["beta"] == -3  # derived default
        assert doc["walls"] == 3
        assert doc["window"] == {
            "beta_min": "-12",
            "beta_max": "0",
            "alpha_max": "6",
        }
        text = out_file.read_text()
        assert text.count('class="wall"') == 3
        assert text.count('class="bmt-null"') == 1

    def test_explicit_beta_matches_default(self, run, tmp_path):
        a = tmp_path / "a.svg"
        b = tmp_path / "b.svg"
        code_a, _, _ = run(
            "diagram", "--v", "1,0,-5,11", "--window", "-12,0,6", "--out", str(a)
        )
        code_b, _, _ = run(
            "diagram", "--v", "1,0,-5,11", "--window", "-12,0,6",
            "--beta", "-3", "--out", str(b),
        )
        assert code_a == code_b == 0
        assert a.read_bytes() == b.read_bytes()

    def test_rank_zero_default_beta(self, run_json, tmp_path):
        doc = run_json(
            "diagram",
            "diagram", "--v", "0,2,-7,37/3", "--window", "-12,0,6",
            "--out", str(tmp_path / "b.svg"), "--json",
        )
        assert doc["beta"] == -5

    def test_negative_rank_needs_explicit_beta(self, run, tmp_path):
        code, out, err = run(
            "diagram", "--v", "-1,0,5,-11", "--window", "-12,0,6",
            "--out", str(tmp_path / "c.svg"),
        )
        assert code == 1
        assert "supply --beta explicitly" in err

    def test_degenerate_window_is_usage_error(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(
                ["diagram", "--v", "1,0,-5,11", "--window", "0,0,6",
                 "--out", str(tmp_path / "d.svg")]
            )
        assert exc.value.code == 2
        capsys.readouterr()


class TestArgvHandling:
    def test_merge_negative_values(self):
        assert _merge_negative_values(["--at", "-4,6"]) == ["--at=-4,6"]
        assert _merge_negative_values(["--wall", "-7/2,9/4"]) == ["--wall=-7/2,9/4"]
        assert _merge_negative_values(["--beta", "-3"]) == ["--beta", "-3"]
        assert _merge_negative_values(["--v", "--json"]) == ["--v", "--json"]
        assert _merge_negative_values(["--v"]) == ["--v"]

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_malformed_character(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["walls", "--v", "1,0,x", "--beta", "-3"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_non_integer_beta(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["walls", "--v", "1,0,-5,11", "--beta", "1/2"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_domain_error_exit_code(self, run):
        code, out, err = run("walls", "--v", "1,0,1,0", "--beta", "-1")
        assert code == 1
        assert err.startswith("DomainError: ")
        assert "discriminant" in err

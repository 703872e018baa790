"""Command-line interface behavior and exit codes."""

import json
import math
import os

import pytest

from lacurves.cli import main

HERE = os.path.dirname(__file__)
CLEF = os.path.join(HERE, "..", "src", "lacurves", "data", "violin_clef.json")


def write_doc(tmp_path, obj, name="prob.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def isosceles_doc():
    return {
        "version": 1, "mode": "list",
        "steps": [{
            "A": [0.0, 0.0], "C": [2.0, 0.0],
            "v_A": [math.cos(math.radians(45)), math.sin(math.radians(45))],
            "v_C_dir": [math.cos(math.radians(-45)),
                        math.sin(math.radians(-45))],
            "target_length": math.sqrt(2),
        }],
    }


def test_solve_isosceles_plain_arc(tmp_path, capsys):
    path = write_doc(tmp_path, isosceles_doc())
    assert main(["solve", path]) == 0
    out = json.loads(capsys.readouterr().out)
    step = out["steps"][0]
    assert step["lambda"] == 0.0
    assert step["instance"] == "plain"


def test_limits_documented_values(tmp_path, capsys):
    doc = {
        "version": 1, "mode": "list",
        "steps": [{
            "A": [0.0, 0.0], "C": [3.0, 0.0],
            "v_A": [math.cos(math.radians(60)), math.sin(math.radians(60))],
            "v_C_dir": [math.cos(math.radians(-30)),
                        math.sin(math.radians(-30))],
            "alpha": -1.0,
        }],
    }
    path = write_doc(tmp_path, doc)
    assert main(["limits", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["r_neg_inf"] == pytest.approx(2.7403, abs=2e-4)
    assert out["r_pos_inf"] == pytest.approx(1.6422, abs=2e-4)


def test_verify_bundled_clef(capsys):
    assert main(["verify", CLEF]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["continuity"]["passed"]


def test_sample_svg_output(tmp_path, capsys):
    out_path = tmp_path / "clef.svg"
    assert main(["sample", CLEF, "--format", "svg", "-o", str(out_path)]) == 0
    svg = out_path.read_text()
    assert svg.startswith("<svg") and "nan" not in svg.lower()


def test_sample_points_output(tmp_path, capsys):
    path = write_doc(tmp_path, {
        "version": 1, "mode": "chain",
        "steps": [isosceles_doc()["steps"][0]],
    })
    assert main(["sample", path, "-n", "8"]) == 0
    pts = json.loads(capsys.readouterr().out)["points"]
    assert len(pts) == 9


def test_input_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{broken")
    assert main(["solve", str(path)]) == 1
    assert "error" in capsys.readouterr().err


def test_solver_error_exit_code(tmp_path, capsys):
    doc = isosceles_doc()
    doc["steps"][0]["target_length"] = 99.0  # circle length is sqrt(2)
    path = write_doc(tmp_path, doc)
    assert main(["solve", path]) == 2
    err = capsys.readouterr().err
    assert "Unreachable" in err and "attainable" in err


def test_mode_mismatch(tmp_path, capsys):
    path = write_doc(tmp_path, isosceles_doc())
    assert main(["chain", path]) == 1


def test_overrides_accepted(tmp_path, capsys):
    path = write_doc(tmp_path, isosceles_doc())
    assert main(["--tol-length", "1e-3", "--quad-tol", "1e-10",
                 "--max-iter", "80", "--seed", "7", "solve", path]) == 0

import json
import subprocess
import sys
from pathlib import Path

import pytest

from infgon.cli import main
from infgon.classify import same_set
from infgon.fixtures import fan
from infgon.io import load_model

MODELS = Path(__file__).resolve().parent.parent / "models"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", MODELS / "S1.json", "--window", 8)
    assert code == 0 and "Holds" in out
    code, out, _ = run(capsys, "check", MODELS / "Z2.json", "--window", 8)
    assert code == 1 and "Fails" in out and "PC2" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", MODELS / "Z2.json", "--window", 8, "--json")
    rep = json.loads(out)
    assert rep["verdict"] == "Fails" and code == 1
    assert rep["witnesses"] and set(rep["timings"]) == {"torsion", "cluster-tilting"}
    assert rep["bounds"] == {"maximality": 8}


def test_precover(capsys):
    code, out, _ = run(capsys, "precover", MODELS / "S1.json", "--target", "0:2,0:7")
    assert code == 0 and "{0:0, 0:7}" in out
    code, out, _ = run(capsys, "precover", MODELS / "Z2.json", "--target", "0:2,0:7")
    assert code == 1


def test_nc(capsys):
    code, out, _ = run(capsys, "nc", MODELS / "B.json", "--window", 4, "--json")
    rep = json.loads(out)
    assert code == 2 and rep["verdict"] == "HoldsUpToBound"
    assert len(rep["nc"]) == 7


def test_flip_round_trip(capsys, tmp_path):
    target = tmp_path / "T.json"
    code, _, _ = run(capsys, "flip", MODELS / "S1.json", "--diagonal", "0:0,0:5",
                     "--window", 8, "-o", target)
    assert code == 0
    back = tmp_path / "back.json"
    code, _, _ = run(capsys, "flip", target, "--diagonal", "0:4,0:6", "--window", 8, "-o", back)
    assert code == 0 and same_set(load_model(back), fan())


def test_render_and_oracle(capsys, tmp_path):
    code, _, _ = run(capsys, "render", MODELS / "S1.json", "-o", tmp_path / "s.svg")
    assert code == 0 and (tmp_path / "s.svg").read_text().startswith("<?xml")
    code, out, _ = run(capsys, "oracle", "--polygon", 6, "--exhaustive")
    assert code == 0 and "triangulations=14" in out


@pytest.mark.parametrize("argv", [
    ["check"],
    ["frobnicate"],
    ["oracle", "--polygon", "x"],
    ["check", "/nonexistent/model.json"],
    ["precover", str(MODELS / "S1.json"), "--target", "0:1"],
    ["oracle", "--polygon", "20"],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 3


def test_bad_model_reports_location(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"zmodel": {"limit_points": -1}}')
    code, _, err = run(capsys, "check", p)
    assert code == 3 and "zmodel.limit_points" in err


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "infgon.cli", "oracle", "--polygon", "5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "catalan=5" in res.stdout

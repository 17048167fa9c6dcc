"""The ``wtoric`` command line."""

import json
import subprocess
import sys

import pytest

from wtoric import __version__
from wtoric.cli import main


def write(tmp_path, obj, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(path)


def test_run_to_file(tmp_path, capsys):
    cfg = write(tmp_path, {"type_label": "A2", "lambda_set": [[1, 1]], "K": [1]})
    out = tmp_path / "r.json"
    assert main(["run", cfg, "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["ok"] and rep["dossier"]["all"]
    assert "report written" in capsys.readouterr().out


def test_run_is_byte_identical(tmp_path):
    cfg = write(tmp_path, {"type_label": "G2", "lambda_set": [[1, 1]], "K": [2]})
    outs = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        main(["run", cfg, "--out", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_run_stdout(tmp_path, capsys):
    cfg = write(tmp_path, {"type_label": "A1", "lambda_set": [[1]], "checks": ["classify"]})
    assert main(["run", cfg]) == 0
    assert json.loads(capsys.readouterr().out)["polytope"]["n_vertices"] == 2


@pytest.mark.parametrize("text", ["{not json", json.dumps({"type_label": "Z9", "lambda_set": [[1]]})])
def test_run_bad_config(tmp_path, capsys, text):
    assert main(["run", write(tmp_path, text)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_run_missing_file(tmp_path):
    assert main(["run", str(tmp_path / "nope.json")]) == 2


def test_run_failure_exit(tmp_path, capsys):
    cfg = write(tmp_path, {"type_label": "A3", "lambda_set": [[0, 1, 0]]})
    assert main(["run", cfg]) == 1
    assert "force_degenerate" in capsys.readouterr().err


def test_example_hexagon(capsys, tmp_path):
    out = tmp_path / "hex.json"
    assert main(["example", "a2-hexagon", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "quotient J: X_E0 - 2*Y1 + Y2" in text
    assert "golden: match" in text
    assert json.loads(out.read_text())["example"]["golden_match"]


def test_example_pentagon_mismatch(capsys):
    assert main(["example", "i25-pentagon"]) == 1
    err = capsys.readouterr().err
    assert "+Tr(r2) on A^1 = 1" in err


def test_selftest_rank1(capsys):
    assert main(["selftest", "--rank-cap", "1"]) == 0
    out = capsys.readouterr().out
    assert "PASS  A1 singleton K=[]" in out


def test_version():
    r = subprocess.run([sys.executable, "-m", "wtoric", "--version"], capture_output=True, text=True)
    assert r.returncode == 0
    assert __version__ in r.stdout


def test_unknown_example():
    with pytest.raises(SystemExit):
        main(["example", "nope"])

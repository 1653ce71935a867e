import io
import json
import subprocess
import sys

import pytest

from goialg.cli import main

DIVERGENT = "q . s . Q * s o (t' . t . P)"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_table_sigma():
    code, text = run("table", "s", "--n", "4")
    assert code == 0
    assert text.splitlines() == ["0 ↦ 1", "1 ↦ 0", "2 ↦ 3", "3 ↦ 2"]


def test_table_undefined():
    code, text = run("table", "p", "--n", "2")
    assert text.splitlines() == ["0 ↦ 0", "1 ↦ undefined"]


def test_eval_zero_map():
    assert run("eval", "p . Q") == (0, "[]\n")
    code, text = run("eval", "t", "--json")
    assert code == 0 and json.loads(text)["pieces"]


def test_nf():
    code, text = run("nf", "D o V")
    assert code == 0
    assert text.splitlines()[-1] == "bicyclic NF: (1, 1)"
    code, text = run("nf", "t . s")
    assert "bicyclic" not in text


def test_laws_all():
    code, text = run("laws", "all")
    assert code == 0
    assert text.splitlines()[-1].startswith("all: ")
    assert "fails" not in text


def test_laws_json():
    code, text = run("laws", "dynamical", "--json", "--seed", "2")
    assert code == 0
    assert json.loads(text)["suite"] == "dynamical"


def test_oracle_command():
    code, text = run("oracle", "(id # V) o T' o (D # id)", "--n", "1024")
    assert code == 0
    assert text.endswith("0 disagreements\n")


def test_export_import_round_trip(tmp_path):
    path = tmp_path / "d.json"
    assert run("export", "D", "-o", str(path))[0] == 0
    code, text = run("import", str(path))
    assert code == 0 and text.startswith("DyadicPInj [")
    assert text.split(" ", 1)[1].strip() == run("eval", "D")[1].strip()
    sq = tmp_path / "sq.json"
    assert run("export", "t", "--square", "--pretty", "-o", str(sq))[0] == 0
    code, text = run("import", str(sq))
    assert code == 0 and text.startswith("RookSquare NN → NN")


def test_import_rejects_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[1, 2]")
    assert run("import", str(path))[0] == 2
    assert run("import", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize("argv", [
    ["eval", "p ."],
    ["eval", "(p"],
    ["frobnicate"],
    [],
    ["laws", "nosuchsuite"],
    ["table", "s", "--n", "four"],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_divergence_exits_3(monkeypatch):
    assert run("eval", DIVERGENT, "--max-iter", "3")[0] == 3
    monkeypatch.setenv("GOI_MAX_ITER", "3")
    assert run("eval", DIVERGENT)[0] == 3
    assert run("eval", "x80")[0] == 3


def test_bad_max_iter_env(monkeypatch):
    monkeypatch.setenv("GOI_MAX_ITER", "lots")
    assert run("eval", "s")[0] == 2
    monkeypatch.setenv("GOI_MAX_ITER", "-1")
    assert run("eval", "s")[0] == 2


def test_help_exits_0():
    assert run("--help")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "goialg", "table", "t", "--n", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["0 ↦ 0", "1 ↦ 2", "2 ↦ 4"]

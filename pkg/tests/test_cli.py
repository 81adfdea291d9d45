import json
import subprocess
import sys

import pytest

from rmtcount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--class", "nonneg", "--mu", "1,1", "--mutilde", "1,1", "--json")
    assert code == 0 and json.loads(out)["value"] == 2


def test_count_normalizes_unsorted_sums(capsys):
    _, out, _ = run(capsys, "count", "--class", "nonneg", "--mu", "1,2", "--mutilde", "2,1", "--json")
    d = json.loads(out)
    assert d["params"]["mu"] == [2, 1] and d["value"] == 2


def test_count_bisym_genfunc(capsys):
    _, out, _ = run(capsys, "count", "--class", "bisym", "--mu", "1", "--chi1", "0", "--method", "genfunc", "--json")
    d = json.loads(out)
    assert d["value"] == d["genfunc"] == 1


def test_count_prescribed_diagonal(capsys):
    _, out, _ = run(capsys, "count", "--class", "sym", "--mu", "1,1", "--diag-sum", "0", "--json")
    assert json.loads(out)["value"] == 1


def test_avg_exact_and_mc(capsys):
    _, out, _ = run(capsys, "avg", "exact", "--group", "u", "--N", "4", "--sc", "2", "--csc", "2", "--json")
    assert json.loads(out)["value"] == 2
    _, out, _ = run(capsys, "avg", "exact", "--group", "o", "--N", "2", "--sc", "2", "--extra", "scp:2", "--json")
    assert json.loads(out)["value"] == 1
    _, out, _ = run(capsys, "avg", "mc", "--group", "sp", "--N", "2", "--sc", "0,1", "--samples", "10000", "--json")
    d = json.loads(out)
    assert set(d) == {"estimate_re", "estimate_im", "stderr_re", "stderr_im", "samples", "seed"}
    assert abs(d["estimate_re"] - 1) <= 4 * d["stderr_re"] + 1e-3


def test_paths(capsys):
    _, out, _ = run(capsys, "paths", "--model", "return", "--walkers", "2", "--halfsteps", "2", "--mu", "1,1",
                    "--mutilde", "1,1", "--json")
    assert json.loads(out)["value"] == 2
    _, out, _ = run(capsys, "paths", "--model", "wall", "--walkers", "1", "--halfsteps", "1", "--mu", "2", "--json")
    assert json.loads(out)["value"] == 1


def test_pp(capsys):
    _, out, _ = run(capsys, "pp", "box", "--a", "2", "--b", "2", "--c", "2", "--method", "barnes", "--json")
    assert json.loads(out)["value"] == 20
    _, out, _ = run(capsys, "pp", "box", "--a", "1", "--b", "1", "--c", "1", "--qpoly", "--json")
    assert json.loads(out)["qpoly"] == ["0: 1", "1: 1"]
    _, out, _ = run(capsys, "pp", "sym-even", "--a", "2", "--c", "1", "--method", "gamma", "--json")
    assert json.loads(out)["value"] == 5


def test_wigner(capsys):
    _, out, _ = run(capsys, "wigner", "--kind", "hermitian", "--N", "2", "--json")
    d = json.loads(out)
    assert d["closed_form"] == -1 and d["oracle_poly"] == d["closed_poly"]
    _, out, _ = run(capsys, "wigner", "--kind", "wishart", "--n", "2", "--p", "1", "--mc", "--samples", "20000",
                    "--dist", "rademacher", "--json")
    d = json.loads(out)
    assert abs(d["mc_estimate"] - d["closed_form"]) <= 4 * d["stderr"] + 1e-3


def test_verify_exit_codes(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, err = run(capsys, "verify", "magic", "--out", str(out_file), "--timing")
    assert code == 0 and "FAIL: 0" in out and "magic:" in err
    assert json.loads(out_file.read_text())["summary"]["FAIL"] == 0
    code, _, _ = run(capsys, "verify", "eq1", "--cap", "2", "--N", "1", "--samples", "200")
    assert code == 1


def test_errors_exit_2(capsys):
    code, _, err = run(capsys, "count", "--class", "nonneg", "--mu", "x")
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(capsys, "wigner", "--kind", "chiral", "--n", "2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "rmtcount.cli", "pp", "sym", "--a", "1", "--c", "2", "--json"],
                       capture_output=True, text=True, check=True)
    assert json.loads(r.stdout)["value"] == 3

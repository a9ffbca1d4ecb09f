import json
import subprocess
import sys

import pytest

from jpk.cli import main
from jpk.jack import clear_tables


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_latex_anchor(capsys):
    code, out, _ = run(capsys, "compute", "jack", "--r", "2", "--m", "2,0", "--format", "latex")
    assert code == 0
    assert out.strip() == "m_{(2,0)} + \\frac{2d}{d+2} m_{(1,1)}"


def test_compute_ijack(capsys):
    code, out, _ = run(capsys, "compute", "ijack", "--r", "2", "--m", "1,0")
    assert code == 0 and out.strip() == "m[1,0] - (d/2)*m[0,0]"


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "jack", "--r", "2", "--m", "2,0", "--format", "json")
    doc = json.loads(out)
    assert doc["basis"] == "m" and doc["r"] == 2 and doc["jack_basis"] == [2, 0]
    assert doc["terms"][1] == {"partition": [1, 1], "coeff": {"num": ["0", "2"], "den": ["2", "1"]}}


def test_kernel_json(capsys):
    code, out, _ = run(capsys, "compute", "kernel", "--r", "1", "--trunc", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["N"] == 2 and [t["u_partition"] for t in doc["terms"]] == [[0], [1], [2]]


def test_invalid_partition_exit2(capsys):
    code, _, err = run(capsys, "compute", "jack", "--r", "2", "--m", "1,0,0")
    assert code == 2 and "partition longer than r" in err


@pytest.mark.parametrize("argv", [
    ["compute", "jack", "--r", "2", "--m", "2,0", "--d", "0"],
    ["compute", "jack", "--r", "0"],
    ["compute", "jack", "--r", "2", "--d", "x/y"],
    ["compute", "nonsense"],
])
def test_bad_input_exit2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_singular_exit3(capsys):
    code, _, _ = run(capsys, "compute", "jack", "--r", "2", "--m", "2,0", "--d", "-2")
    assert code == 3


def test_verify_singular_exit3(capsys):
    code, out, _ = run(capsys, "verify", "sekiguchi-eigen", "--r", "2", "--max-weight", "2",
                       "--d", "-2")
    assert code == 3 and "SKIP" in out


def test_verify_pass_and_determinism(capsys):
    argv = ["verify", "sekiguchi-eigen", "--r", "2", "--max-weight", "4"]
    a = run(capsys, *argv)
    b = run(capsys, *argv, "--jobs", "1")
    assert a[0] == 0 and a[1] == b[1]
    assert "9 pass, 0 fail, 0 skip" in a[1]


def test_verify_all_rank_one(capsys):
    code, out, _ = run(capsys, "verify", "all", "--r", "1", "--max-weight", "5", "--trunc", "5")
    assert code == 0 and "FAIL" not in out


def test_lemma_sum_lists_points(capsys):
    code, out, _ = run(capsys, "verify", "lemma-sum", "--r", "2", "--seed", "7")
    assert code == 0
    pts = [ln for ln in out.splitlines() if ln.strip().startswith("points:")]
    assert len(pts) == 4 and all(ln.count("x=(") == 20 for ln in pts)


def test_json_verify(capsys):
    code, out, _ = run(capsys, "verify", "psi-pieri", "--r", "2", "--max-weight", "2",
                       "--format", "json", "--d", "1/3")
    doc = json.loads(out)
    assert code == 0 and doc["suites"][0]["counts"]["fail"] == 0


def test_cache_round_trip(tmp_path, capsys):
    path = tmp_path / "cache.json"
    argv = ["verify", "ijack-pieri", "--r", "2", "--max-weight", "2", "--box", "2",
            "--cache", str(path)]
    cold = run(capsys, *argv)
    assert path.exists()
    clear_tables()
    warm = run(capsys, *argv)
    assert cold[0] == warm[0] == 0 and cold[1] == warm[1]


def test_cache_mismatch_exit2(tmp_path, capsys, monkeypatch):
    path = tmp_path / "cache.json"
    assert run(capsys, "compute", "jack", "--r", "2", "--m", "1", "--cache", str(path))[0] == 0
    assert run(capsys, "compute", "jack", "--r", "3", "--m", "1", "--cache", str(path))[0] == 2
    monkeypatch.setenv("JPK_CACHE", str(path))
    assert run(capsys, "compute", "jack", "--r", "3", "--m", "1", "--cache",
               str(tmp_path / "other.json"))[0] == 2


def test_cache_absent_is_cold_start(tmp_path, capsys):
    path = tmp_path / "missing.json"
    assert run(capsys, "compute", "jack", "--r", "2", "--m", "2", "--cache", str(path))[0] == 0


def test_bad_version_exit2(tmp_path, capsys):
    path = tmp_path / "cache.json"
    path.write_text(json.dumps({"format_version": 99, "r": 2, "d_mode": "symbolic"}))
    assert run(capsys, "compute", "jack", "--r", "2", "--m", "2", "--cache", str(path))[0] == 2


def test_entry_point_subprocess():
    p = subprocess.run([sys.executable, "-m", "jpk.cli", "compute", "bernoulli", "--r", "1",
                        "--m", "2"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "m[2] - m[1] + (1/6)*m[0]"

import csv
import json

import pytest

from fbic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_det_rate(capsys):
    assert run(capsys, "det-rate", "--n", "5", "--m", "2", "--p2", "1", "--k", "3") == (0, "7/2 = 3.5\n", "")


def test_det_rate_json(capsys):
    code, out, _ = run(capsys, "det-rate", "--n", "7", "--m", "4", "--p2", "1", "--k", "3", "--json")
    assert code == 0
    assert json.loads(out)["rate"] == "9/2"


def test_det_sim(capsys):
    argv = ["det-sim", "--n", "7", "--m", "4", "--p2", "1", "--k", "3", "--blocks", "100", "--seed", "7"]
    code, out, err = run(capsys, *argv)
    assert (code, out, err) == (0, "100/100 blocks decoded, rate 9/2\n", "")
    assert run(capsys, *argv)[1] == out


def test_det_sim_unsupported_regime(capsys):
    code, out, err = run(capsys, "det-sim", "--n", "4", "--m", "3", "--p2", "1", "--k", "3", "--blocks", "5")
    assert code == 3 and out == "" and "unsupported" in err


def test_gdof(capsys):
    assert run(capsys, "gdof", "--alpha", "3", "--beta", "0.2") == (0, "1.2\n", "")
    code, out, err = run(capsys, "gdof", "--alpha", "1", "--beta", "0")
    assert code == 3 and out == "" and err.strip() == "GDoF not well defined at alpha=1"


def test_gauss_rate(capsys):
    code, out, err = run(capsys, "gauss-rate", "--snr-db", "40", "--inr-db", "10", "--cfb", "1", "--k", "3")
    assert code == 0 and err == ""
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["regime"] == "very_weak"
    assert float(lines["rate"]) == pytest.approx(7.8369675461850673, rel=1e-11)


def test_gauss_rate_middle_regime(capsys):
    code, out, _ = run(capsys, "gauss-rate", "--snr-db", "40", "--inr-db", "30", "--cfb", "inf", "--k", "3")
    assert code == 0 and "rate: NA" in out
    code, out, err = run(capsys, "gauss-rate", "--snr-db", "40", "--inr-db", "30", "--cfb", "1", "--k", "3", "--optimize")
    assert code == 3 and out == ""


def test_gauss_rate_errors(capsys):
    base = ["gauss-rate", "--snr-db", "40", "--inr-db", "10", "--cfb", "1", "--k", "3"]
    assert run(capsys, *base, "--mu", "1,1,1,1")[0] == 1
    assert run(capsys, *base, "--mu", "0.1,0.1,0.0001,0.1", "--optimize")[0] == 2
    assert run(capsys, *base[:-2], "--k", "3", "--cfb", "-1")[0] == 2
    assert run(capsys, "gauss-rate", "--snr-db", "40")[0] == 2


def test_gauss_rate_optimize_json(capsys):
    code, out, _ = run(capsys, "gauss-rate", "--snr-db", "40", "--inr-db", "10", "--cfb", "1", "--k", "3",
                       "--optimize", "--json")
    data = json.loads(out)
    assert code == 0 and data["rate"] >= 7.8369675461850673


def test_invalid_parameters_exit_1(capsys):
    code, out, err = run(capsys, "det-rate", "--n", "0", "--m", "0", "--p2", "0", "--k", "3")
    assert code == 1 and out == "" and err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "det-rate", "--n", "x", "--m", "1", "--p2", "0", "--k", "2")[0] == 2
    assert run(capsys, "det-sweep", "--beta-list", "0", "--k", "3")[0] == 2
    assert run(capsys, "det-rate", "--n", "1", "--m", "1", "--p2", "0", "--k", "2", "--seed", "-1")[0] == 2


def test_sweeps_write_files(tmp_path, capsys):
    out = tmp_path / "det.csv"
    code, stdout, _ = run(capsys, "det-sweep", "--beta-list", "0,0.1,0.2,inf", "--k", "3", "--out", str(out))
    assert code == 0 and stdout == ""
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 4 * 361
    anchor = [r for r in rows if (r["alpha_num"], r["alpha_den"], r["beta"]) == ("2", "3", "0")]
    assert anchor[0]["rate_norm_frac"] == "2/3"

    out = tmp_path / "g.csv"
    code, _, _ = run(capsys, "gauss-sweep", "--alpha", "0.25", "--k", "3", "--cfb-list", "0,1,inf",
                     "--snr-db-range", "10:60:6", "--out", str(out))
    assert code == 0 and len(out.read_text().splitlines()) == 1 + 18

    out = tmp_path / "audit.csv"
    code, stdout, _ = run(capsys, "gap-audit", "--k-list", "2,3,4", "--cfb-list", "0,1,2,4,inf",
                          "--snr-db-range", "10:60:6", "--out", str(out))
    assert code == 0
    assert json.loads(stdout) == {**json.loads(stdout), "points": 630, "failures_regime": 0, "failures_L": 0}


def test_gauss_sweep_middle_regime(tmp_path, capsys):
    code, _, err = run(capsys, "gauss-sweep", "--alpha", "0.8", "--k", "3", "--cfb-list", "0",
                       "--snr-db-range", "10:60:6", "--out", str(tmp_path / "x.csv"))
    assert code == 3 and err


def test_byte_identical_reruns(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run(capsys, "gauss-sweep", "--alpha", "2.5", "--k", "2", "--cfb-list", "0,inf",
            "--snr-db-range", "10:40:4", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_module_entry_point_exit_codes():
    import subprocess
    import sys

    ok = subprocess.run([sys.executable, "-m", "fbic.cli", "det-rate", "--n", "5", "--m", "2", "--p2", "1", "--k", "3"],
                        capture_output=True, text=True)
    assert (ok.returncode, ok.stdout, ok.stderr) == (0, "7/2 = 3.5\n", "")
    bad = subprocess.run([sys.executable, "-m", "fbic.cli", "gdof", "--alpha", "1", "--beta", "0"],
                         capture_output=True, text=True)
    assert (bad.returncode, bad.stdout) == (3, "")

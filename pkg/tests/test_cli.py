import json
import math

import pytest

from omgci import cli
from omgci.cohinfo import coherent_info, limit_inf


def run(capsys, argv):
    rc = cli.main(argv)
    out = capsys.readouterr().out
    return rc, out


def test_eval_zero_points(capsys):
    rc, out = run(capsys, ["eval", "--tau", "0.8", "--k", "0.1", "--n", "0"])
    assert rc == 0
    assert out.splitlines()[0] == "G = 0 nats"

    rc, out = run(capsys, ["eval", "--tau", "0.5", "--k", "0", "--n", "7"])
    assert rc == 0
    g_line = out.splitlines()[0]
    assert abs(float(g_line.split()[2])) < 1e-12


def test_eval_value_and_bits(capsys):
    rc, out = run(capsys, ["eval", "--tau", "0.75", "--k", "0.1", "--n", "2"])
    assert rc == 0
    nats = float(out.splitlines()[0].split()[2])
    assert nats == pytest.approx(coherent_info(2.0, 0.1, 0.75), rel=1e-15)
    rc, out = run(capsys, ["eval", "--tau", "0.75", "--k", "0.1", "--n", "2",
                           "--base", "bits"])
    bits = float(out.splitlines()[0].split()[2])
    assert bits == pytest.approx(nats / math.log(2.0), rel=1e-14)
    assert out.splitlines()[0].endswith("bits")


def test_eval_domain_error_exit_code(capsys):
    rc = cli.main(["eval", "--tau", "-1", "--k", "0.1", "--n", "2"])
    capsys.readouterr()
    assert rc == 2


def test_scan_csv_shape_and_determinism(tmp_path):
    args = ["scan", "--tau", "0.6667", "--k", "0.0833", "--points", "50"]
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.main(args + ["--out", str(p1)]) == 0
    assert cli.main(args + ["--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    lines = p1.read_text().splitlines()
    assert lines[0] == "# base=nats"
    assert lines[1] == "N,G,dGdN"
    assert len(lines) == 52
    n, g_val, slope = (float(x) for x in lines[2].split(","))
    assert n == pytest.approx(1e-6, rel=1e-12)
    assert g_val == pytest.approx(coherent_info(n, 0.0833, 0.6667), rel=1e-12)


def test_scan_values_round_trip_17g(tmp_path):
    out = tmp_path / "scan.csv"
    assert cli.main(["scan", "--tau", "0.8", "--k", "0.05", "--points", "20",
                     "--out", str(out)]) == 0
    for line in out.read_text().splitlines()[2:]:
        n, g_val, _ = (float(x) for x in line.split(","))
        assert g_val == coherent_info(n, 0.05, 0.8)  # exact round-trip


def test_limit_sup_stationary_threshold(capsys):
    rc, out = run(capsys, ["limit", "--tau", "0.66666666666666663", "--k",
                           "0.083333333333333329"])
    assert rc == 0
    assert float(out) == pytest.approx(0.06764415113721034, rel=1e-9)

    rc, out = run(capsys, ["sup", "--tau", "0.4", "--k", "3"])
    assert rc == 0
    assert out.strip() == "0 @ N=0"

    rc, out = run(capsys, ["sup", "--tau", "0.75", "--k", "0"])
    assert rc == 0
    value, _, where = out.split()
    assert where == "N=inf"
    assert float(value) == pytest.approx(limit_inf(0.0, 0.75), rel=1e-12)

    rc, out = run(capsys, ["stationary", "--tau", "0.66666666666666663",
                           "--k", "0.083333333333333329"])
    assert rc == 0
    kv = dict(line.split(" = ") for line in out.splitlines())
    assert kv["exists"] == "true"
    assert kv["shape"] == "dip_then_positive"
    assert float(kv["value"]) < 0.0

    rc, out = run(capsys, ["threshold", "--tau", "0.66666666666666663"])
    assert rc == 0
    assert float(out) == pytest.approx(0.0979384578, abs=1e-8)


def test_region_map_csv(tmp_path):
    out = tmp_path / "map.csv"
    rc = cli.main(["region-map", "--tau-min", "0.2", "--tau-max", "1.8",
                   "--y-min", "0", "--y-max", "2", "--res", "8",
                   "--out", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "# base=nats"
    assert lines[1] == "tau,y,K,label,limit"
    assert len(lines) == 2 + 64
    labels = {line.split(",")[3] for line in lines[2:]}
    assert {"unphysical", "positive_ci", "zero_ci"} <= labels
    # unphysical rows leave K and the limit empty
    row = next(line for line in lines[2:] if line.split(",")[3] == "unphysical")
    parts = row.split(",")
    assert parts[2] == "" and parts[4] == ""


def test_region_map_thread_cap_is_deterministic(tmp_path, monkeypatch):
    args = ["region-map", "--tau-min", "0.2", "--tau-max", "1.8",
            "--y-min", "0", "--y-max", "2", "--res", "10"]
    seq, par = tmp_path / "seq.csv", tmp_path / "par.csv"
    assert cli.main(args + ["--out", str(seq)]) == 0
    monkeypatch.setenv("OMG_COHINFO_THREADS", "4")
    assert cli.main(args + ["--out", str(par)]) == 0
    assert seq.read_bytes() == par.read_bytes()
    monkeypatch.setenv("OMG_COHINFO_THREADS", "zero")
    assert cli.main(args) == 2


def test_plot_files_created(tmp_path):
    fig1 = tmp_path / "scan.png"
    rc = cli.main(["scan", "--tau", "0.6667", "--k", "0.0833", "--points", "40",
                   "--out", str(tmp_path / "s.csv"), "--plot", str(fig1)])
    assert rc == 0
    assert fig1.stat().st_size > 0

    fig2 = tmp_path / "map.png"
    rc = cli.main(["region-map", "--tau-min", "0.2", "--tau-max", "1.8",
                   "--y-min", "0", "--y-max", "2", "--res", "12",
                   "--out", str(tmp_path / "m.csv"), "--plot", str(fig2)])
    assert rc == 0
    assert fig2.stat().st_size > 0


def test_verify_small_sample_json(tmp_path):
    out = tmp_path / "report.json"
    rc = cli.main(["verify", "--samples", "200", "--out", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["passed"]
    assert report["samples"] == 200

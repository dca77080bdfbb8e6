import csv
import json
import subprocess
import sys

import pytest

from linkrank.cli import REPORT_KEYS, argv_from_config, main
from oracles import brute_kendall

REFERENCE_SWEEP_18 = {"A": 1.3138034, "B": 0.98844457, "C": 0.98842573, "D": 0.7101132}


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_rank_reference_sweep(capsys, four_page_path):
    code, out, _ = run(capsys, "rank", "--algo", "pagerank", "--graph", str(four_page_path), "--max-iter", "18")
    assert code == 0
    report = json.loads(out)
    assert set(REPORT_KEYS) <= set(report)
    assert report["converged"] is False and report["iterations"] == 18
    for k, v in REFERENCE_SWEEP_18.items():
        assert report["scores"][k] == pytest.approx(v, abs=1e-6)


def test_ten_significant_digits(capsys, four_page_path):
    _, out, _ = run(capsys, "rank", "--algo", "pagerank", "--graph", str(four_page_path), "--max-iter", "18")
    assert '"A": 1.313803256' in out


def test_zero_damping(capsys, four_page_path):
    _, out, _ = run(capsys, "rank", "--algo", "pagerank", "--graph", str(four_page_path), "--damping", "0")
    assert set(json.loads(out)["scores"].values()) == {1.0}


def test_distance_requires_seeds(capsys, four_page_path):
    code, _, err = run(capsys, "rank", "--algo", "distance", "--graph", str(four_page_path))
    assert code == 2 and "--seeds" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["rank", "--algo", "bogus", "--graph", "x"],
        ["rank", "--algo", "pagerank", "--graph", "x", "--frobnicate"],
        ["rank", "--graph", "x"],
        ["rank", "--algo", "pagerank", "--graph", "x", "--damping", "1.5"],
        ["rank", "--algo", "normalized-pagerank", "--graph", "x", "--mode", "sequential"],
        ["compare", "--graph", "x", "--algos", "pagerank"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_line_exit_1(capsys, tmp_path):
    p = tmp_path / "bad.tsv"
    p.write_text("A B\nB C D\n")
    code, out, err = run(capsys, "rank", "--algo", "pagerank", "--graph", str(p))
    assert code == 1 and out == ""
    assert "line 2" in err and len(err.strip().splitlines()) == 1


def test_unknown_seed_exit_1(capsys, four_page_path):
    code, _, err = run(capsys, "rank", "--algo", "distance", "--graph", str(four_page_path), "--seeds", "Q")
    assert code == 1 and "'Q'" in err


def test_missing_file_exit_1(capsys, tmp_path):
    assert run(capsys, "rank", "--algo", "pagerank", "--graph", str(tmp_path / "none"))[0] == 1


def test_replay_round_trip(capsys, tmp_path, four_page_path):
    code, out, _ = run(capsys, "rank", "--algo", "wpr", "--graph", str(four_page_path), "--mode", "synchronous", "--tol", "1e-11")
    rep = tmp_path / "report.json"
    rep.write_text(out)
    assert run(capsys, "replay", str(rep))[1] == out
    assert run(capsys, *argv_from_config(json.loads(out)["config"]))[1] == out


def test_trace_csv(capsys, tmp_path, four_page_path):
    trace = tmp_path / "trace.csv"
    _, out, _ = run(capsys, "rank", "--algo", "pagerank", "--graph", str(four_page_path), "--trace", str(trace))
    report = json.loads(out)
    with open(trace, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["iteration", "node", "value"]
    assert len(rows) - 1 == (report["iterations"] + 1) * 4
    assert rows[1:5] == [["0", lab, "1.0"] for lab in "ABCD"]
    assert float(rows[5][2]) == pytest.approx(1.5666667, abs=1e-6)


@pytest.mark.parametrize(
    "algo, extra, nodes",
    [
        ("normalized-pagerank", [], "ABCD"),
        ("hits", [], "ABCD"),
        ("hits", ["--roots", "A", "--cap", "0"], "ABC"),
        ("distance", ["--seeds", "A"], "ABCD"),
    ],
)
def test_other_algorithms(capsys, tmp_path, four_page_path, algo, extra, nodes):
    trace = tmp_path / "t.csv"
    code, out, _ = run(capsys, "rank", "--algo", algo, "--graph", str(four_page_path), "--trace", str(trace), *extra)
    assert code == 0
    report = json.loads(out)
    assert set(report["scores"]) == set(nodes)
    n_rows = len(trace.read_text().strip().splitlines()) - 1
    assert n_rows == (report["iterations"] + 1) * len(report["scores"])


def test_eigenrumor_format(capsys, tmp_path):
    p = tmp_path / "blogs.tsv"
    p.write_text("alice\tP\tpost1\nbob\tP\tpost2\nalice\tE\tpost2\n")
    code, out, _ = run(capsys, "rank", "--algo", "eigenrumor", "--graph", str(p))
    report = json.loads(out)
    assert code == 0 and set(report["scores"]) == {"post1", "post2"}
    assert report["scores"]["post2"] > report["scores"]["post1"]
    assert set(report["agent_authority"]) == {"alice", "bob"}


def test_eigenrumor_bad_kind_exit_1(capsys, tmp_path):
    p = tmp_path / "blogs.tsv"
    p.write_text("alice\tQ\tpost1\n")
    code, _, err = run(capsys, "rank", "--algo", "eigenrumor", "--graph", str(p))
    assert code == 1 and "line 1" in err


def test_csv_format(capsys, four_page_path):
    _, out, _ = run(capsys, "rank", "--algo", "pagerank", "--graph", str(four_page_path), "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "node,score" and len(lines) == 5


def test_compare_self(capsys, four_page_path):
    code, out, _ = run(capsys, "compare", "--graph", str(four_page_path), "--algos", "pagerank,pagerank")
    assert code == 0
    assert json.loads(out)["kendall_tau"] == [[1.0, 1.0], [1.0, 1.0]]


def test_compare_pagerank_normalized(capsys, four_page_path):
    _, out, _ = run(capsys, "compare", "--graph", str(four_page_path), "--algos", "pagerank,normalized-pagerank")
    res = json.loads(out)
    assert res["kendall_tau"][0][1] == 1.0
    assert res["rankings"][1]["mode"] == "synchronous"


def test_compare_pagerank_hits(capsys, four_page_path):
    _, out, _ = run(capsys, "compare", "--graph", str(four_page_path), "--algos", "pagerank,hits")
    res = json.loads(out)
    x, y = (r["ranking"] for r in res["rankings"])
    assert res["kendall_tau"][0][1] == pytest.approx(brute_kendall(x, y), abs=1e-15)


def test_compare_rejects_eigenrumor(capsys, four_page_path):
    assert run(capsys, "compare", "--graph", str(four_page_path), "--algos", "pagerank,eigenrumor")[0] == 2


def test_module_entry_point(four_page_path):
    proc = subprocess.run(
        [sys.executable, "-m", "linkrank", "rank", "--algo", "hits", "--graph", str(four_page_path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["algorithm"] == "hits"

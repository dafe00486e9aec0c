import csv as csvlib
import json
import subprocess
import sys

import pytest

from zerograph.cli import run
from zerograph.symchar import char_table_sn
from zerograph.tableio import dumps, ingest, ingest_text, tables_equal


def test_table_command(tmp_path):
    out = tmp_path / "s8.json"
    assert run(["table", "sn", "--n", "8", "--out", str(out)]) == 0
    assert tables_equal(ingest(out), char_table_sn(8).table)
    csv = tmp_path / "a5.csv"
    assert run(["table", "an", "--n", "5", "--csv", str(csv), "--out", str(tmp_path / "a5.json")]) == 0
    rows = list(csvlib.reader(csv.read_text().splitlines()))
    assert rows[0] == ["character", "(1,1,1,1,1)", "(2,2,1)", "(3,1,1)", "(5)a", "(5)b"]
    assert rows[4][4:] == ["1/2+1/2*sqrt(5)", "1/2-1/2*sqrt(5)"]


def test_table_to_stdout(capsys):
    assert run(["table", "sn", "--n", "4"]) == 0
    assert tables_equal(ingest_text(capsys.readouterr().out), char_table_sn(4).table)


def test_verify_common_zero_check(tmp_path, capsys):
    report = tmp_path / "report.json"
    assert run(["verify", "thm-a", "--n", "8", "--json", str(report)]) == 0
    bundle = json.loads(report.read_text())
    assert bundle["status"] == "pass"
    assert len(bundle["reports"][0]["details"]["non_adjacent_pairs"]) == 4
    assert "PASS thm-a" in capsys.readouterr().out


def test_graph_dot(tmp_path, capsys):
    dot = tmp_path / "a5.dot"
    js = tmp_path / "a5.json"
    assert run(["graph", "gamma-v", "--group", "an:5", "--dot", str(dot), "--json", str(js)]) == 0
    assert dot.read_text().count("subgraph cluster_") == 3
    assert len(json.loads(js.read_text())["components"]) == 3
    assert "3 components" in capsys.readouterr().out


def test_graph_from_file(tmp_path):
    path = tmp_path / "s5.json"
    path.write_text(dumps(char_table_sn(5).table))
    assert run(["graph", "delta-v", "--group", f"file:{path}"]) == 0
    assert run(["graph", "gamma", "--group", "fixture:psl2_11"]) == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["table", "sn"],
        ["verify", "thm-b"],
        ["graph", "gamma-v", "--group", "nonsense"],
        ["graph", "gamma-v", "--group", "sn:x"],
        ["verify", "thm-a", "--n", "8", "--threads", "0"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(argv) == 2


def test_computation_errors_exit_1(tmp_path, capsys):
    assert run(["table", "sn", "--n", "30"]) == 1
    assert run(["verify", "thm-a", "--n", "6"]) == 1
    assert run(["graph", "gamma-v", "--group", f"file:{tmp_path / 'missing.json'}"]) == 1
    assert "zerograph:" in capsys.readouterr().err


def test_ingest(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(dumps(char_table_sn(5).table))
    assert run(["ingest", str(good)]) == 0
    d = json.loads(good.read_text())
    d["characters"][1]["values"][1] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    rep = tmp_path / "rep.json"
    assert run(["ingest", str(bad), "--json", str(rep)]) == 1
    assert json.loads(rep.read_text())["status"] == "fail"


def test_metrics_pequiv(tmp_path):
    csv = tmp_path / "p.csv"
    assert run(["metrics", "pequiv", "--n", "6", "--csv", str(csv)]) == 0
    assert csv.read_text().startswith("character,class,block,value\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nk", "--n", "10"],
        ["verify", "connectivity", "--max-n", "8"],
        ["verify", "lemma-3-5", "--n", "7"],
        ["verify", "van-rigidity", "--max-n", "7"],
        ["verify", "metrics", "--n", "5"],
        ["verify", "coprime", "--max-n", "6"],
        ["verify", "coprime", "--group", "fixture:gl2_3"],
        ["verify", "min-degree", "--n", "9"],
        ["verify", "mod2", "--max-n", "9"],
        ["verify", "signature-pairs", "--n", "7"],
        ["verify", "small-alternating"],
        ["verify", "fixtures"],
    ],
)
def test_each_check_passes(argv):
    assert run(argv) == 0


def test_cache_flags(tmp_path, monkeypatch):
    monkeypatch.setenv("ZEROGRAPH_CACHE_DIR", str(tmp_path / "env"))
    assert run(["table", "an", "--n", "6", "--out", str(tmp_path / "a.json")]) == 0
    assert (tmp_path / "env" / "an-6-v1.json").is_file()
    assert run(["--cache-dir", str(tmp_path / "flag"), "table", "sn", "--n", "6", "--out", str(tmp_path / "b.json")]) == 0
    assert (tmp_path / "flag" / "sn-6-v1.json").is_file()
    assert run(["table", "sn", "--n", "7", "--no-cache", "--out", str(tmp_path / "c.json")]) == 0
    assert not (tmp_path / "env" / "sn-7-v1.json").exists()


def test_threads_give_byte_identical_output(tmp_path):
    outs = []
    for extra in (["--threads", "1"], []):
        path = tmp_path / f"all{len(extra)}.json"
        dot = tmp_path / f"s9{len(extra)}.dot"
        assert run(["verify", "all", "--max-n", "10", "--no-cache", "--json", str(path)] + extra) == 0
        assert run(["graph", "gamma-v", "--group", "sn:9", "--no-cache", "--dot", str(dot)] + extra) == 0
        outs.append((path.read_bytes(), dot.read_bytes()))
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zerograph", "verify", "no-such-check"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    proc = subprocess.run(
        [sys.executable, "-m", "zerograph", "verify", "min-degree", "--n", "10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "PASS min-degree" in proc.stdout

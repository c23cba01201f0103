import csv
import io
import json
import subprocess
import sys

import pytest

from antimagic.cli import main
from antimagic.construction import construct
from antimagic.formats import write_graph, write_labeling
from antimagic.graph import Graph, make_star, theorem_graph
from antimagic.sweep import CSV_HEADER


@pytest.fixture
def h1_files(tmp_path):
    g, l = tmp_path / "h1.graph", tmp_path / "h1.lab"
    g.write_text(write_graph(theorem_graph(1)))
    l.write_text(write_labeling(theorem_graph(1), construct(1)))
    return g, l


def test_construct_base(tmp_path, capsys):
    out = tmp_path / "f.txt"
    assert main(["construct", "--n", "1", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[1:] == ["1 2 1", "1 3 5", "1 4 4", "2 3 2", "2 4 3"]
    assert capsys.readouterr().out.startswith("Base1, colors=3")


def test_construct_json(tmp_path, capsys):
    out = tmp_path / "f.json"
    assert main(["construct", "--n", "3", "--format", "json", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["edges"]) == 11
    assert capsys.readouterr().out.startswith("C2, colors=3")


def test_construct_stdout_keeps_summary_separate(capsys):
    assert main(["construct", "--n", "3"]) == 0
    cap = capsys.readouterr()
    assert cap.out.startswith("labeling 11\n")
    assert "C2, colors=3" in cap.err


@pytest.mark.parametrize("n, name", [(5, "DivisibleByThree"), (4, "EvenN"), (0, "")])
def test_construct_rejected(n, name, capsys):
    assert main(["construct", "--n", str(n)]) == 2
    assert name in capsys.readouterr().err


def test_construct_io_failure(tmp_path):
    assert main(["construct", "--n", "3", "--out", str(tmp_path / "missing" / "f.txt")]) == 3


def test_construct_then_verify(tmp_path, capsys):
    g, l = tmp_path / "h.graph", tmp_path / "h.lab"
    assert main(["construct", "--n", "3", "--out", str(l), "--graph-out", str(g)]) == 0
    capsys.readouterr()
    assert main(["verify", str(g), str(l)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["accept", "weights: 15 19 19 19 30 30", "colors: 3"]


def test_verify_base(h1_files, capsys):
    assert main(["verify", *map(str, h1_files), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"accepted": True, "weights": [10, 6, 7, 7], "colors": 3, "violations": []}


def test_verify_non_bijective(h1_files, capsys):
    g, l = h1_files
    l.write_text("labeling 5\n1 2 1\n1 3 5\n1 4 5\n2 3 2\n2 4 3\n")
    assert main(["verify", str(g), str(l)]) == 1
    out = capsys.readouterr().out
    assert "duplicate labels: [5]" in out and "missing labels: [4]" in out


def test_verify_local_antimagic_violation(tmp_path, capsys):
    g = Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
    gp, lp = tmp_path / "g", tmp_path / "l"
    gp.write_text(write_graph(g))
    lp.write_text("labeling 4\n1 2 3\n2 3 1\n1 3 4\n3 4 2\n")
    assert main(["verify", str(gp), str(lp)]) == 1
    out = capsys.readouterr().out
    assert out.startswith("reject") and "violation: 1 -- 3 both weigh 7" in out


def test_verify_parse_errors(h1_files, tmp_path):
    g, l = h1_files
    bad = tmp_path / "bad"
    bad.write_text("nonsense\n")
    assert main(["verify", str(bad), str(l)]) == 3
    assert main(["verify", str(g), str(bad)]) == 3
    assert main(["verify", str(tmp_path / "nope"), str(l)]) == 3


def test_solve_triangle(tmp_path, capsys):
    p = tmp_path / "tri"
    p.write_text("p 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert main(["solve", str(p)]) == 0
    d = json.loads(capsys.readouterr().out)
    assert (d["chi_la"], d["exact"]) == (3, True)


def test_solve_h3(tmp_path, capsys):
    p = tmp_path / "h3"
    p.write_text(write_graph(theorem_graph(3)))
    assert main(["solve", str(p), "--budget-ms", "60000"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert (d["chi_la"], d["exact"], d["lower_bound"]) == (3, True, 3)


def test_solve_timeout(tmp_path, capsys):
    p = tmp_path / "star30"
    p.write_text(write_graph(make_star(30)))
    assert main(["solve", str(p), "--budget-ms", "1"]) == 1
    d = json.loads(capsys.readouterr().out)
    assert d["exact"] is False and d["status"] == "timeout"


def test_solve_parse_error(tmp_path):
    p = tmp_path / "bad"
    p.write_text("p 2\ne 1 5\n")
    assert main(["solve", str(p)]) == 3


@pytest.mark.parametrize("n, lower", [(3, 5), (9, 11)])
def test_counterexample(n, lower, capsys):
    assert main(["counterexample", "--n", str(n)]) == 0
    out = capsys.readouterr().out
    assert "refuted=true" in out
    assert f"claimed lower bound for chi_la(G v K2bar): {lower}" in out
    assert "certified upper bound for chi_la(G v K2bar): 3" in out


def test_counterexample_json(capsys):
    assert main(["counterexample", "--n", "7", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert (d["chi_la_star"], d["chi_la_join_upper"], d["claimed_lower"], d["refuted"]) == (8, 3, 9, True)


def test_counterexample_rejected():
    assert main(["counterexample", "--n", "5"]) == 2


def test_sweep_1_99(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--from", "1", "--to", "99", "--out", str(out)]) == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == CSV_HEADER
    body = rows[1:]
    expected_n = [n for n in range(1, 100) if n % 2 == 1 and (n + 1) % 3 != 0]
    assert [int(r[0]) for r in body] == expected_n
    assert len(body) == 34
    assert all(r[2] == "true" and r[3] == "3" for r in body)
    assert capsys.readouterr().out.strip() == "rows=34 verified=34 Base1=1 C1=8 C2=9 C3=8 C4=8"


def test_sweep_byte_exact_modulo_timing(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--from", "1", "--to", "9", "--out", str(out)]) == 0
    trimmed = "\n".join(line.rsplit(",", 1)[0] for line in out.read_text().splitlines())
    assert trimmed == (
        "n,case,verified,colors,hub_w,leaf_w,apex_w\n"
        "1,Base1,true,3,10,6,7\n"
        "3,C2,true,3,15,19,30\n"
        "7,C1,true,3,45,37,124\n"
        "9,C3,true,3,66,46,195"
    )


def test_sweep_empty(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--from", "5", "--to", "5", "--out", str(out)]) == 0
    assert out.read_text() == ",".join(CSV_HEADER) + "\n"


def test_sweep_parallel_matches_serial(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["sweep", "--from", "1", "--to", "200", "--out", str(a)])
    main(["sweep", "--from", "1", "--to", "200", "--out", str(b), "--jobs", "2"])
    strip = lambda p: [line.rsplit(",", 1)[0] for line in p.read_text().splitlines()]
    assert strip(a) == strip(b)


@pytest.mark.parametrize("bounds", [("0", "5"), ("9", "3"), ("1", "1000001")])
def test_sweep_bad_range(bounds):
    assert main(["sweep", "--from", bounds[0], "--to", bounds[1]]) == 2


def test_export(h1_files, tmp_path, capsys):
    g, l = h1_files
    assert main(["export", str(g), "--labeling", str(l)]) == 0
    assert '1 [label="v: 10"];' in capsys.readouterr().out
    out = tmp_path / "g.dot"
    assert main(["export", str(g), "--out", str(out)]) == 0
    assert "--" in out.read_text() and "label=\"v\"" in out.read_text()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "antimagic", "construct", "--n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "DivisibleByThree" in proc.stderr

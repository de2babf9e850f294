import csv
import json
import os
import subprocess
import sys

import pytest

from spreadmatch import build_graph
from spreadmatch.cli import main
from spreadmatch.io import format_graph, format_matching, parse_graph, parse_matching, ParseError


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, capsys):
    paths = {}
    for name, extra in [("prism", ["--k", "3"]), ("petersen", []), ("k4", [])]:
        p = tmp_path / f"{name}.graph"
        assert run(capsys, "gen", "--type", name, *extra, "--out", str(p))[0] == 0
        paths[name] = str(p)
    return paths


def test_gen_outputs(files, tmp_path, capsys):
    g = parse_graph(open(files["petersen"]).read())
    assert (g.n, g.m) == (10, 15)
    code, out, _ = run(capsys, "gen", "--type", "truncate", "--input", files["k4"])
    assert code == 0 and out.splitlines()[0] == "12 18"
    code, out, _ = run(capsys, "gen", "--type", "random", "--n", "100", "--seed", "7")
    assert code == 0 and parse_graph(out).n == 100
    assert run(capsys, "gen", "--type", "random", "--n", "100")[0] == 2
    assert run(capsys, "gen", "--type", "prism", "--k", "2")[0] == 2


def test_match_prism(files, capsys):
    code, out, _ = run(capsys, "match", files["prism"])
    lines = out.splitlines()
    ids = [int(x) for x in lines[:-1]]
    assert code == 0 and len(ids) == 3 and ids == sorted(ids)
    assert len(set(ids) & {6, 7, 8}) == 1
    assert json.loads(lines[-1]) == {"perfect": True, "well_spread": True, "n": 6, "cut_count": 7}
    code, out, _ = run(capsys, "match", files["petersen"])
    assert len(out.splitlines()) == 6


def test_match_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("4 5\n0 1\n")
    assert run(capsys, "match", str(bad))[0] == 2
    ring = []
    for i in range(4):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        ring += [(a, b), (a, c), (b, c), (b, d), (c, d), (d, (4 * i + 4) % 16)]
    two = tmp_path / "two.graph"
    two.write_text(format_graph(build_graph(16, ring)))
    assert run(capsys, "match", str(two))[0] == 3
    assert run(capsys, "match", str(tmp_path / "missing.graph"))[0] == 2


def test_verify(files, tmp_path, capsys):
    mfile = tmp_path / "m.txt"
    mfile.write_text(format_matching({6, 7, 8}))
    code, out, _ = run(capsys, "verify", files["prism"], str(mfile))
    rep = json.loads(out)
    assert code == 0 and rep["perfect"] and not rep["well_spread"]
    assert rep["violated_cuts"] == [{"side_size": 3, "cut_edges": [6, 7, 8], "intersection": 3}]
    mfile.write_text(format_matching({6, 1, 4}))
    assert json.loads(run(capsys, "verify", files["prism"], str(mfile))[1])["well_spread"]
    mfile.write_text("6\n1\n")
    assert not json.loads(run(capsys, "verify", files["prism"], str(mfile))[1])["perfect"]
    mfile.write_text("x\n")
    assert run(capsys, "verify", files["prism"], str(mfile))[0] == 2


def test_cactus_exports(files, capsys):
    data = json.loads(run(capsys, "cactus", files["prism"], "--format", "json")[1])
    assert (len(data["nodes"]), len(data["edges"])) == (8, 7)
    assert sum(n["kind"] == "leaf" for n in data["nodes"]) == 6
    assert len(json.loads(run(capsys, "cactus", files["k4"])[1])["nodes"]) == 5
    assert len(json.loads(run(capsys, "cactus", files["petersen"])[1])["nodes"]) == 11
    dot = run(capsys, "cactus", files["prism"], "--format", "dot")[1]
    assert dot.startswith("graph cactus {")


def test_pair(files, capsys):
    rep = json.loads(run(capsys, "pair", files["petersen"])[1])
    assert rep["shared_count"] == 1 and rep["bound"] == 1
    rep = json.loads(run(capsys, "pair", files["k4"])[1])
    assert rep["shared_count"] == 0 and rep["bound"] == 0


def test_pair_quarantine(files, tmp_path, capsys, monkeypatch):
    from spreadmatch import cli
    from spreadmatch.application import BoundViolated, MatchingPair

    def boom(g):
        raise BoundViolated(g, MatchingPair(frozenset(), frozenset(), frozenset({0, 1}), 0))

    monkeypatch.setattr(cli, "small_intersection_pair", boom)
    qdir = tmp_path / "q"
    code, _, err = run(capsys, "pair", files["k4"], "--quarantine", str(qdir))
    assert code == 5
    (dumped,) = os.listdir(qdir)
    assert (qdir / dumped).read_text() == open(files["k4"]).read()


def test_bench_csv(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code = run(capsys, "bench", "--sizes", "100..400", "--seeds", "1,2", "--out", str(out))[0]
    rows = list(csv.reader(open(out)))
    assert code == 0
    assert rows[0] == ["n", "seed", "cactus_ms", "decompose_ms", "assemble_ms", "total_ms", "verified"]
    assert [(r[0], r[1]) for r in rows[1:]] == [(n, s) for n in ("100", "200", "400") for s in ("1", "2")]
    assert all(r[6] == "true" and float(r[5]) >= 0 for r in rows[1:])
    code = run(capsys, "bench", "--sizes", "96", "--seeds", "1", "--median3", "--jobs", "2",
               "--family", "truncated", "--out", str(out))[0]
    assert code == 0
    assert run(capsys, "bench", "--sizes", "7", "--seeds", "1")[0] == 2


def test_graph_file_format():
    text = "# comment\n4 6\n0 1\n0 2\n# inner\n0 3\n1 2\n1 3\n2 3\n"
    g = parse_graph(text)
    assert format_graph(g) == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    with pytest.raises(ParseError):
        parse_graph("4 7\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("2 3\n0 0\n0 1\n1 1\n")
    assert parse_matching("3\n1\n") == {1, 3}
    assert format_matching({3, 1}) == "1\n3\n"


def test_console_script_runs_and_is_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "spreadmatch.cli"]
    g = tmp_path / "r.graph"
    subprocess.run(cmd + ["gen", "--type", "random", "--n", "300", "--seed", "5", "--out", str(g)], check=True)
    outs = [subprocess.run(cmd + ["match", str(g)], check=True, capture_output=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]

import json

import pytest

from graphfun.cli import main
from graphfun.families import random_graph
from graphfun.graph import write_graph


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    report = json.loads(out) if out.strip() else None
    return code, report


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g.txt"
    write_graph(random_graph(8, 0.5, 3), path)
    return str(path)


def test_gen_and_fun_graph(tmp_path, capsys):
    out = str(tmp_path / "c5.txt")
    code, _ = run(capsys, ["gen", "random-graph", "--n", "5", "--p", "0", "--seed", "0", "--out", out])
    assert code == 0
    # overwrite with an actual C5
    (tmp_path / "c5.txt").write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
    code, report = run(capsys, ["fun", "graph", str(tmp_path / "c5.txt")])
    assert code == 0
    assert report["result"]["value"] == 2


def test_fun_vertex_and_min(graph_file, capsys):
    code, report = run(capsys, ["fun", "vertex", graph_file, "--vertex", "0"])
    assert code == 0 and "value" in report["result"]
    code, report = run(capsys, ["fun", "min", graph_file, "--recheck"])
    assert code == 0 and report["result"]["recheck"] is True


def test_determinism(graph_file, capsys):
    _, r1 = run(capsys, ["fun", "graph", graph_file])
    _, r2 = run(capsys, ["fun", "graph", graph_file])
    assert r1["result"] == r2["result"]
    assert r1["input_digest"] == r2["input_digest"]


def test_sd_and_params(graph_file, capsys):
    code, report = run(capsys, ["sd", "pair", graph_file, "--x", "0", "--y", "1"])
    assert code == 0 and report["result"]["pair"] == [0, 1]
    code, report = run(capsys, ["sd", "min", graph_file])
    assert code == 0
    code, report = run(capsys, ["degeneracy", graph_file])
    assert code == 0 and len(report["result"]["order"]) == 8
    code, report = run(capsys, ["vcdim", graph_file])
    assert code == 0 and report["result"]["value"] <= 3


def test_kexpr_eval_and_check(tmp_path, capsys):
    from graphfun.kexpr import C5_EXPRESSION_TEXT

    path = tmp_path / "c5.kx"
    path.write_text(C5_EXPRESSION_TEXT + "\n")
    code, report = run(capsys, ["kexpr", "eval", str(path)])
    assert code == 0 and report["result"]["n"] == 5
    code, report = run(capsys, ["kexpr", "check", str(path)])
    assert code == 0
    assert report["result"]["passed"] and report["result"]["min_fun"] == 2
    assert report["result"]["bound"] == 7


def test_witness_commands(tmp_path, capsys):
    code, _ = run(capsys, ["gen", "permutation", "--n", "20", "--seed", "1",
                           "--out", str(tmp_path / "p.txt")])
    assert code == 0
    code, report = run(capsys, ["witness", "permutation", str(tmp_path / "p.txt"), "--recheck"])
    assert code == 0
    assert report["result"]["support_size"] <= 8 and report["result"]["recheck"]

    code, _ = run(capsys, ["gen", "unit-intervals", "--n", "10", "--seed", "1",
                           "--out", str(tmp_path / "iv.txt")])
    assert code == 0
    code, report = run(capsys, ["witness", "unit-interval", str(tmp_path / "iv.txt")])
    assert code == 0 and report["result"]["t"] >= 1

    (tmp_path / "k4.txt").write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, report = run(capsys, ["witness", "line-graph", str(tmp_path / "k4.txt"),
                                "--edge", "0", "1", "--recheck"])
    assert code == 0 and report["result"]["recheck"]


def test_hyper3_commands(tmp_path, capsys):
    code, _ = run(capsys, ["gen", "hypergraph", "--n", "40", "--m", "30", "--seed", "2",
                           "--out", str(tmp_path / "h.txt")])
    assert code == 0
    code, report = run(capsys, ["hyper3", "bound", str(tmp_path / "h.txt"), "--recheck"])
    assert code == 0
    assert report["result"]["bound"] <= 462 and report["result"]["recheck"]
    # no thick pair -> structure lookup is a usage error
    code, _ = run(capsys, ["hyper3", "structure", str(tmp_path / "h.txt")])
    assert code == 2


def test_verify_subcommand(capsys):
    code, report = run(capsys, ["verify", "sd-construction", "--t", "3"])
    assert code == 0 and report["result"]["passed"]
    code, report = run(capsys, ["verify", "hypercube"])
    assert code == 0 and report["result"]["passed"]


def test_usage_errors(graph_file, capsys):
    assert main(["fun", "vertex", graph_file]) == 2  # missing --vertex
    assert main(["nonsense"]) == 2


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    assert main(["fun", "min", str(bad)]) == 3
    badkx = tmp_path / "bad.kx"
    badkx.write_text("eta(1,1,node(1,a))\n")
    assert main(["kexpr", "eval", str(badkx)]) == 3
    assert main(["fun", "min", str(tmp_path / "missing.txt")]) == 3

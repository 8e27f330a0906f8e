"""Acceptance suite: one test per criterion, at full stated scale.

Each test prints a single PASS/FAIL line (visible with ``pytest -v -s`` or
on failure) in addition to asserting.
"""
import time

from graphfun import verify
from graphfun.graph import Graph
from graphfun.naive import (
    naive_degeneracy,
    naive_fun_graph,
    naive_min_sd,
    naive_vc_dimension,
)


def _report(name, passed, payload, elapsed):
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] {name} ({elapsed:.1f}s): {payload}")


def _run(name, target, **kwargs):
    start = time.time()
    passed, payload = verify.run_target(target, **kwargs)
    _report(name, passed, payload if not passed else {k: v for k, v in payload.items() if k != "failures"}, time.time() - start)
    assert passed, payload
    return payload


def test_01_oracle_equivalence():
    _run("1 oracle equivalence (200 graphs)", "oracle-equivalence", seed=0, cases=200)


def test_02_ground_truths():
    start = time.time()
    c5 = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    p4 = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    k6 = Graph.from_edge_list(6, [(i, j) for i in range(6) for j in range(i + 1, 6)])
    k5 = Graph.from_edge_list(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    values = {
        "fun_graph(C5)": (naive_fun_graph(c5), 2),
        "fun_graph(P4)": (naive_fun_graph(p4), 1),
        "fun_graph(K6)": (naive_fun_graph(k6), 0),
        "min_sd(C5)": (naive_min_sd(c5), 2),
        "vc(C5)": (naive_vc_dimension(c5), 2),
        "degeneracy(K5)": (naive_degeneracy(k5), 4),
    }
    passed = all(got == want for got, want in values.values())
    _report("2 ground truths (naive oracles)", passed,
            {k: got for k, (got, _) in values.items()}, time.time() - start)
    for name, (got, want) in values.items():
        assert got == want, f"{name}: got {got}, want {want}"


def test_03_unit_interval():
    _run("3 unit interval bounds (100 + 50 exhaustive)", "unit-interval",
         seed=0, cases=100)


def test_04_permutation():
    _run("4 permutation witnesses <= 8 (100 cases)", "permutation", seed=0, cases=100)


def test_05_line_graphs():
    _run("5 line graph witnesses <= 6 (50 graphs)", "line-graph", seed=0, cases=50)


def test_06_clique_width():
    _run("6 clique-width bound (C5 anchor + 100 + 100)", "cwd-bound",
         seed=0, cases=100)


def test_07_sd_construction():
    _run("7 sd construction min_sd >= t, t = 1..6", "sd-construction", t=6)


def test_08_hypercube():
    _run("8 hypercube lower bounds (Q3, Q4)", "hypercube")


def test_09_vc_dimension():
    _run("9 VC-dimension (shattering graphs + log bound)", "vcdim", seed=0, cases=50)


def test_10_hypergraphs():
    _run("10 3-uniform hypergraph witnesses (20 + fixtures)", "hyper3",
         seed=0, cases=20)


def test_11_structural_inequalities():
    _run("11 structural inequalities (200 graphs)", "sd-link", seed=0, cases=200)
    _run("11 fun_graph <= degeneracy (200 graphs)", "degeneracy-bound",
         seed=0, cases=200)

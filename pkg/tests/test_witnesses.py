from fractions import Fraction

import pytest

from graphfun.families import (
    IntervalSet,
    Permutation,
    line_graph,
    permutation_graph,
    random_graph,
    random_permutation,
    unit_interval_graph,
)
from graphfun.functionality import fun_graph, fun_vertex
from graphfun.graph import Graph
from graphfun.witnesses import (
    DnfWitness,
    classify_middles,
    line_graph_witness,
    permutation_witness,
    strict_middle_witness,
    sum_sd_consecutive,
    unit_interval_pair,
)


def complete(n):
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_dnf_witness_evaluate():
    w = DnfWitness(0, (1, 2, 3, 4), ((0, 1), (2, 3)))
    assert w.evaluate(0b0011) == 1
    assert w.evaluate(0b1100) == 1
    assert w.evaluate(0b0101) == 0
    empty = DnfWitness(0, (), ())
    assert empty.evaluate(0) == 0


def test_unit_interval_pair_small():
    iv = IntervalSet((Fraction(0), Fraction(1, 3)))
    assert unit_interval_pair(iv) == (1, 0)
    with pytest.raises(ValueError):
        unit_interval_pair(IntervalSet((Fraction(0),)))


def test_unit_interval_dense_instances():
    from graphfun.verify import _dense_intervals

    for seed in range(5):
        iv = _dense_intervals(40, seed)
        t, value = unit_interval_pair(iv)
        assert 1 <= t < iv.n
        assert value <= 1
        assert sum_sd_consecutive(iv) <= 2 * iv.n - 3


def test_unit_interval_fun_bound_exhaustive():
    from graphfun.families import random_unit_intervals

    for seed in range(5):
        iv = random_unit_intervals(7, seed)
        assert fun_graph(unit_interval_graph(iv)).value <= 2


def test_classify_middles_example():
    vm, hm = classify_middles(Permutation((6, 1, 4, 2, 5, 3)))
    assert vm == frozenset({4, 2, 3})
    assert hm == frozenset({2, 5, 4})


def test_strict_middle_identity():
    p = Permutation((1, 2, 3, 4, 5))
    w = strict_middle_witness(p, 3)
    assert w.target == 2
    assert set(w.support) == {1, 3}  # values 2 and 4, zero-based
    assert w.verify(permutation_graph(p))
    with pytest.raises(ValueError):
        strict_middle_witness(p, 1)  # boundary point


def test_strict_middle_small_permutations():
    import itertools

    any_found = False
    for values in itertools.permutations(range(1, 5)):
        p = Permutation(values)
        for x in range(1, 5):
            if _try_strict(p, x):
                any_found = True
                w = strict_middle_witness(p, x)
                assert len(w.support) == 4
                assert w.verify(permutation_graph(p))
    assert any_found


def test_strict_middle_614253_boundary_rejected():
    with pytest.raises(ValueError):
        strict_middle_witness(Permutation((6, 1, 4, 2, 5, 3)), 1)


def _try_strict(p, x):
    from graphfun.witnesses import _step1_support

    return _step1_support(p, x, frozenset()) is not None


def test_permutation_witness_small_n_rejected():
    with pytest.raises(ValueError):
        permutation_witness(Permutation(tuple(range(1, 13))))


def test_permutation_witness_identity_13():
    p = Permutation(tuple(range(1, 14)))
    w = permutation_witness(p)
    assert len(set(w.support)) <= 8
    assert w.verify(permutation_graph(p))


def test_permutation_witness_random_and_exact_crosscheck():
    for seed in range(10):
        p = random_permutation(13 + seed * 7, seed)
        w = permutation_witness(p)
        g = permutation_graph(p)
        assert len(set(w.support)) <= 8
        assert w.verify(g)
        if p.n <= 20:
            assert fun_vertex(g, w.target).value <= 8


def test_line_graph_witness_k5():
    w = line_graph_witness(complete(5), (0, 1))
    assert len(w.support) == 6
    assert len(w.terms) == 2


def test_line_graph_witness_star():
    star = Graph.from_edge_list(6, [(0, i) for i in range(1, 6)])
    w = line_graph_witness(star, (0, 1))
    assert len(w.support) == 3
    assert w.terms == ((0, 1, 2),)


def test_line_graph_witness_k2():
    w = line_graph_witness(Graph.from_edge_list(2, [(0, 1)]), (0, 1))
    assert w.support == () and w.terms == ()


def test_line_graph_witness_rejects_non_edge():
    with pytest.raises(ValueError):
        line_graph_witness(complete(3), (0, 3))


def test_line_graph_witness_every_edge_random():
    for seed in range(3):
        g = random_graph(15, 0.4, seed)
        lg, _ = line_graph(g)
        for e in g.edges():
            w = line_graph_witness(g, e)
            assert len(w.support) <= 6
            assert w.verify(lg)

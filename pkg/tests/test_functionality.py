import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphfun.families import random_graph
from graphfun.functionality import (
    fun_graph,
    fun_graph_lower,
    fun_vertex,
    fun_vertex_upper,
    is_function_of,
    min_fun,
)
from graphfun.graph import Graph, induced_subgraph
from graphfun.naive import naive_fun_graph, naive_fun_vertex, naive_min_fun
from graphfun.symdiff import sd_pair


def cycle(n):
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


small_graphs = st.builds(
    random_graph,
    n=st.integers(min_value=1, max_value=8),
    p=st.sampled_from([0.2, 0.5, 0.8]),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)


def test_is_function_of_rejects_target_in_support():
    g = cycle(5)
    with pytest.raises(ValueError):
        is_function_of(g, 0, {0, 1})


def test_is_function_of_full_support_always_works():
    g = cycle(5)
    fn = is_function_of(g, 0, {1, 2, 3, 4})
    assert fn is not None and fn.verify(g)


def test_is_function_of_none_on_conflict():
    # In P3, the endpoints of the path conflict for the middle vertex
    g = Graph.from_edge_list(3, [(0, 1), (1, 2)])
    assert is_function_of(g, 0, set()) is None


def test_fun_vertex_isolated_and_dominating():
    g = Graph.from_edge_list(3, [(0, 1)])
    assert fun_vertex(g, 2).value == 0  # isolated
    assert fun_vertex(complete(4), 0).value == 0


def test_fun_vertex_witness_verifies():
    g = cycle(6)
    res = fun_vertex(g, 0)
    assert len(res.witness_set) == res.value
    assert res.witness_fn.verify(g)


def test_min_fun_lowest_index_tie():
    res = min_fun(cycle(5))
    assert res.witness_vertex == 0  # all vertices tie by symmetry


def test_fun_graph_ground_truths():
    assert fun_graph(cycle(5)).value == 2
    p4 = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert fun_graph(p4).value == 1
    assert fun_graph(complete(6)).value == 0


def test_fun_graph_reports_attaining_subgraph():
    g = cycle(5)
    res = fun_graph(g)
    sub, mapping = induced_subgraph(g, res.subgraph)
    back = {v: i for i, v in enumerate(mapping)}
    assert min_fun(sub).value == res.value
    assert (
        is_function_of(sub, back[res.witness_vertex], {back[v] for v in res.witness_set})
        is not None
    )


def test_fun_graph_lower_is_a_lower_bound():
    g = random_graph(12, 0.5, 7)
    exact = fun_graph(g).value
    assert fun_graph_lower(g, trials=20, seed=0) <= exact


@settings(max_examples=40, deadline=None)
@given(small_graphs)
def test_oracle_equivalence(g):
    for y in range(g.n):
        assert fun_vertex(g, y).value == naive_fun_vertex(g, y)


@settings(max_examples=30, deadline=None)
@given(small_graphs)
def test_fun_bounded_by_degree_and_codegree(g):
    for y in range(g.n):
        assert fun_vertex(g, y).value <= min(g.degree(y), g.n - 1 - g.degree(y))


@settings(max_examples=30, deadline=None)
@given(small_graphs)
def test_upper_bound_dominates_exact(g):
    for y in range(g.n):
        up = fun_vertex_upper(g, y)
        assert up.value >= fun_vertex(g, y).value
        assert up.witness_fn.verify(g)


@settings(max_examples=20, deadline=None)
@given(small_graphs)
def test_fun_linked_to_sd(g):
    for x in range(g.n):
        fx = fun_vertex(g, x).value
        for y in range(g.n):
            if y != x:
                assert fx <= sd_pair(g, x, y) + 1


@settings(max_examples=15, deadline=None)
@given(small_graphs, st.integers(min_value=0, max_value=2**16))
def test_fun_graph_monotone_under_induced_subgraphs(g, seed):
    import random

    if g.n < 2:
        return
    rng = random.Random(seed)
    size = rng.randint(1, g.n)
    sub, _ = induced_subgraph(g, sorted(rng.sample(range(g.n), size)))
    assert fun_graph(sub).value <= fun_graph(g).value


@settings(max_examples=10, deadline=None)
@given(
    st.builds(
        random_graph,
        n=st.integers(min_value=1, max_value=6),
        p=st.sampled_from([0.3, 0.6]),
        seed=st.integers(min_value=0, max_value=2**32 - 1),
    )
)
def test_fun_graph_matches_naive(g):
    assert fun_graph(g).value == naive_fun_graph(g)
    assert min_fun(g).value == naive_min_fun(g)

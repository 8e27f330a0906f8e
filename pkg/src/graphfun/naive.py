"""Independent brute-force oracles.

Everything here is written against the definitions only — plain
increasing-size subset enumeration with no sharing of search code with the
optimized implementations — so the two can check each other.
"""
from __future__ import annotations

import itertools

from .graph import Graph, induced_subgraph


def naive_fun_vertex(g: Graph, y: int) -> int:
    """Smallest support size by increasing-size subset enumeration."""
    if not 0 <= y < g.n:
        raise ValueError(f"vertex {y} out of range")
    others = [v for v in range(g.n) if v != y]
    for k in range(len(others) + 1):
        for support in itertools.combinations(others, k):
            if _is_function_of_naive(g, y, support):
                return k
    raise AssertionError("unreachable: the full vertex set is always a support")


def _is_function_of_naive(g: Graph, y: int, support: tuple[int, ...]) -> bool:
    """Adjacency to y must be a function of the adjacency profile over the
    support, for vertices outside {y} | support."""
    seen: dict[tuple[int, ...], int] = {}
    for z in range(g.n):
        if z == y or z in support:
            continue
        profile = tuple(1 if g.has_edge(x, z) else 0 for x in support)
        bit = 1 if g.has_edge(y, z) else 0
        if seen.setdefault(profile, bit) != bit:
            return False
    return True


def naive_min_fun(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("empty graph")
    return min(naive_fun_vertex(g, y) for y in range(g.n))


def naive_fun_graph(g: Graph) -> int:
    """max over nonempty induced subgraphs of min over vertices."""
    if g.n == 0:
        raise ValueError("empty graph")
    best = 0
    for size in range(1, g.n + 1):
        for vertices in itertools.combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, vertices)
            best = max(best, naive_min_fun(sub))
    return best


def naive_sd_pair(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise ValueError("need two distinct vertices")
    return sum(
        1
        for z in range(g.n)
        if z not in (x, y) and g.has_edge(x, z) != g.has_edge(y, z)
    )


def naive_min_sd(g: Graph) -> int:
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    return min(
        naive_sd_pair(g, x, y) for x, y in itertools.combinations(range(g.n), 2)
    )


def naive_sd_graph(g: Graph) -> int:
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    best = 0
    for size in range(2, g.n + 1):
        for vertices in itertools.combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, vertices)
            best = max(best, naive_min_sd(sub))
    return best


def naive_degeneracy(g: Graph) -> int:
    """max over nonempty induced subgraphs of the minimum degree."""
    if g.n == 0:
        raise ValueError("empty graph")
    best = 0
    for size in range(1, g.n + 1):
        for vertices in itertools.combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, vertices)
            best = max(best, min(sub.degree(v) for v in range(sub.n)))
    return best


def naive_vc_dimension(g: Graph) -> int:
    """VC-dimension of the closed neighbourhood family, by direct check of
    every candidate set against every required trace."""
    if g.n == 0:
        raise ValueError("empty graph")
    hoods = [frozenset(g.neighbors(v)) | {v} for v in range(g.n)]
    best = 0
    for size in range(1, g.n + 1):
        found = False
        for candidate in itertools.combinations(range(g.n), size):
            cset = set(candidate)
            traces = {frozenset(cset & h) for h in hoods}
            if len(traces) == 1 << size:
                found = True
                break
        if found:
            best = size
        else:
            break
    return best

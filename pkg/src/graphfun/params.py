"""Companion parameters: degeneracy and the VC-dimension of the closed
neighbourhood set system."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class DegeneracyResult:
    value: int
    order: tuple[int, ...]


@dataclass(frozen=True)
class VcResult:
    value: int
    shattered: frozenset[int]


def degeneracy(g: Graph) -> DegeneracyResult:
    """Exact degeneracy via repeated minimum-degree removal.

    Priority queue over (current degree, vertex) with lazy decrease, so
    ties always resolve to the lowest index.  The elimination order
    certifies the value: each removed vertex has at most ``value``
    not-yet-removed neighbours.
    """
    if g.n == 0:
        raise ValueError("degeneracy of the empty graph is undefined")
    import heapq

    deg = [g.degree(v) for v in range(g.n)]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = 0
    order = []
    value = 0
    for _ in range(g.n):
        while True:
            d, v = heapq.heappop(heap)
            if not removed >> v & 1 and deg[v] == d:
                break
        value = max(value, d)
        removed |= 1 << v
        order.append(v)
        rest = g.rows[v] & ~removed
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            deg[u] -= 1
            heapq.heappush(heap, (deg[u], u))
    return DegeneracyResult(value, tuple(order))


def _is_shattered(candidate: tuple[int, ...], hoods: list[int]) -> bool:
    want = 1 << len(candidate)
    traces = set()
    for h in hoods:
        t = 0
        for i, v in enumerate(candidate):
            if h >> v & 1:
                t |= 1 << i
        traces.add(t)
        if len(traces) == want:
            return True
    return len(traces) == want


def vc_dimension(g: Graph) -> VcResult:
    """Exact VC-dimension of (V, {N[v]}) with a maximum shattered set.

    Candidate sizes are tried from floor(log2 n) downward; within a size,
    lexicographic enumeration makes the returned set the smallest maximum
    one.  A size is skipped outright when the number of distinct closed
    neighbourhoods cannot supply 2^d traces.
    """
    if g.n == 0:
        raise ValueError("vc_dimension of the empty graph is undefined")
    hoods = [g.closed_neighborhood_mask(v) for v in range(g.n)]
    distinct = len(set(hoods))
    for d in range(g.n.bit_length() - 1, 0, -1):
        if distinct < 1 << d:
            continue
        for candidate in itertools.combinations(range(g.n), d):
            if _is_shattered(candidate, hoods):
                return VcResult(d, frozenset(candidate))
    # the empty set is shattered by any nonempty family
    return VcResult(0, frozenset())

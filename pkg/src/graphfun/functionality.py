"""Vertex and graph functionality.

A vertex y is a function of a support set S when the adjacency of every
outside vertex z to y is determined by z's adjacency profile over S.
fun(y) is the size of a smallest such S; fun(G) is the maximum over
induced subgraphs of the minimum vertex functionality.

The exact vertex search is a branch-and-bound over "conflict pairs":
vertices z, z' with different adjacency to y.  A support S works iff for
every conflict pair it contains z, z', or a vertex distinguishing them,
i.e. iff S hits the pair's resolver set.  Feasibility is monotone under
supersets, so minimum hitting set gives exactly fun(y).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, induced_subgraph, mask_of, _bits


@dataclass(frozen=True)
class WitnessFunction:
    """Partial Boolean function certifying that a vertex is a function of
    ``support``.

    ``table`` maps each observed adjacency profile (an int whose bit i is
    the adjacency to support[i]) to the common adjacency value.  Profiles
    absent from the table were never observed and are don't-cares; the
    totalized reading of the function maps them to 0.
    """

    target: int
    support: tuple[int, ...]
    table: dict[int, int]

    def is_dontcare(self, profile: int) -> bool:
        return profile not in self.table

    def evaluate(self, profile: int) -> int:
        # don't-care profiles read as 0 under totalization
        return self.table.get(profile, 0)

    def profile_of(self, g: Graph, z: int) -> int:
        p = 0
        for i, x in enumerate(self.support):
            if g.rows[x] >> z & 1:
                p |= 1 << i
        return p

    def verify(self, g: Graph) -> bool:
        """Replay the table against the graph it was built on."""
        excluded = mask_of(self.support) | (1 << self.target)
        for z in range(g.n):
            if excluded >> z & 1:
                continue
            got = self.table.get(self.profile_of(g, z))
            if got != (g.rows[self.target] >> z & 1):
                return False
        return True


@dataclass(frozen=True)
class FunResult:
    value: int
    witness_vertex: int
    witness_set: frozenset[int]
    witness_fn: WitnessFunction
    subgraph: Optional[frozenset[int]] = None


def is_function_of(g: Graph, y: int, support: Iterable[int]) -> Optional[WitnessFunction]:
    """Witness that y is a function of ``support``, or None.

    Fails iff two outside vertices share an adjacency profile over the
    support but differ in adjacency to y.
    """
    supp = tuple(sorted(set(support)))
    if y in supp:
        raise ValueError("target vertex may not belong to its own support")
    excluded = mask_of(supp) | (1 << y)
    table: dict[int, int] = {}
    yrow = g.rows[y]
    for z in range(g.n):
        if excluded >> z & 1:
            continue
        p = 0
        for i, x in enumerate(supp):
            if g.rows[x] >> z & 1:
                p |= 1 << i
        val = yrow >> z & 1
        prev = table.setdefault(p, val)
        if prev != val:
            return None
    return WitnessFunction(y, supp, table)


def _resolver_masks(g: Graph, y: int) -> list[int]:
    """One bitmask per conflict pair: the vertices whose presence in S
    resolves it (the pair itself plus every distinguishing vertex, y excluded)."""
    ybit = 1 << y
    neigh = [z for z in range(g.n) if z != y and g.rows[y] >> z & 1]
    nonneigh = [z for z in range(g.n) if z != y and not g.rows[y] >> z & 1]
    masks = []
    for z in neigh:
        rz = g.rows[z]
        bz = 1 << z
        for w in nonneigh:
            masks.append(((rz ^ g.rows[w]) | bz | (1 << w)) & ~ybit)
    return masks


def _greedy_lower_bound(masks: list[int], chosen: int) -> int:
    """Count of pairwise-disjoint unresolved resolver sets (a valid lower
    bound on how many more vertices are needed)."""
    used = 0
    count = 0
    for m in masks:
        if m & chosen or m & used:
            continue
        used |= m
        count += 1
    return count


def _min_hitting_set(masks: list[int], cap: int, init: Optional[int]) -> Optional[int]:
    """Smallest mask hitting every resolver mask, of size < cap, else None.

    ``init`` is a known-feasible mask used to seed the bound.  Branching is
    fail-first: pick the unresolved mask with fewest candidates, branch on
    each candidate in increasing index order.
    """
    best_size = cap
    best_mask: Optional[int] = None
    if init is not None and init.bit_count() < best_size:
        best_size = init.bit_count()
        best_mask = init

    masks = sorted(masks, key=lambda m: m.bit_count())

    def rec(chosen: int, count: int) -> None:
        nonlocal best_size, best_mask
        pick = -1
        pick_pop = None
        for m in masks:
            if m & chosen:
                continue
            pop = m.bit_count()
            if pick_pop is None or pop < pick_pop:
                pick, pick_pop = m, pop
                if pop <= 2:
                    break
        if pick == -1:
            if count < best_size:
                best_size = count
                best_mask = chosen
            return
        if count + _greedy_lower_bound(masks, chosen) >= best_size:
            return
        for b in _bits(pick):
            rec(chosen | (1 << b), count + 1)

    rec(0, 0)
    if best_mask is None or best_size >= cap:
        return None
    return best_mask


def _trivial_feasible(g: Graph, y: int) -> int:
    """N(y) or the non-neighbourhood, whichever is smaller, as a mask.
    Both are always feasible supports (constant function outside)."""
    neigh = g.rows[y]
    non = ~(neigh | (1 << y)) & ((1 << g.n) - 1)
    return neigh if neigh.bit_count() <= non.bit_count() else non


def _fun_search(g: Graph, y: int, cap: Optional[int] = None) -> Optional[frozenset[int]]:
    """Minimum support for y of size < cap (cap=None means unbounded)."""
    limit = cap if cap is not None else g.n
    masks = _resolver_masks(g, y)
    if not masks:
        return frozenset() if limit > 0 else None
    init = _trivial_feasible(g, y)
    best = _min_hitting_set(masks, limit, init)
    if best is None:
        return None
    return frozenset(_bits(best))


def fun_vertex(g: Graph, y: int) -> FunResult:
    """Exact fun(y) with an attaining support and verified witness."""
    best = _fun_search(g, y)
    assert best is not None
    fn = is_function_of(g, y, best)
    assert fn is not None
    return FunResult(len(best), y, best, fn)


def fun_vertex_upper(g: Graph, y: int) -> FunResult:
    """Greedy upper bound on fun(y): repeatedly add the vertex resolving
    the most unresolved conflict pairs, ties by lowest index."""
    masks = _resolver_masks(g, y)
    chosen = 0
    while True:
        unresolved = [m for m in masks if not m & chosen]
        if not unresolved:
            break
        counts: dict[int, int] = {}
        for m in unresolved:
            for b in _bits(m):
                counts[b] = counts.get(b, 0) + 1
        pick = max(sorted(counts), key=lambda b: counts[b])
        # max() keeps the first maximum, so sorting the keys makes the
        # tie-break "lowest index"
        chosen |= 1 << pick
    supp = frozenset(_bits(chosen))
    fn = is_function_of(g, y, supp)
    assert fn is not None
    return FunResult(len(supp), y, supp, fn)


def min_fun(g: Graph) -> FunResult:
    """Minimum of fun over all vertices, arg-min vertex lowest index on ties."""
    if g.n == 0:
        raise ValueError("min_fun of the empty graph is undefined")
    best_y = -1
    best_set: Optional[frozenset[int]] = None
    cap: Optional[int] = None
    for y in range(g.n):
        found = _fun_search(g, y, cap)
        if found is not None:
            best_y, best_set = y, found
            cap = len(found)
            if cap == 0:
                break
    assert best_set is not None
    fn = is_function_of(g, best_y, best_set)
    assert fn is not None
    return FunResult(len(best_set), best_y, best_set, fn)


def _min_fun_value_over(g: Graph, cap: int) -> Optional[int]:
    """min_fun(g) if it exceeds ``cap``, else None (early abort).  Used by
    the subgraph sweep, where only strict improvements matter."""
    current: Optional[int] = None
    for y in range(g.n):
        found = _fun_search(g, y, current)
        if found is not None:
            current = len(found)
            if current <= cap:
                return None
    return current


def fun_graph(g: Graph, exact_limit: int = 14) -> FunResult:
    """Exact fun(G): maximum over all nonempty induced subgraphs of min_fun.

    Rejects graphs above ``exact_limit``; use fun_graph_lower for those.
    Subsets are swept in decreasing size; a subset is skipped when its
    trivial bound floor((|H|-1)/2) cannot beat the best value found.
    """
    if g.n == 0:
        raise ValueError("fun_graph of the empty graph is undefined")
    if g.n > exact_limit:
        raise ValueError(
            f"n={g.n} exceeds exact_limit={exact_limit}; use fun_graph_lower "
            "for a certified lower bound"
        )
    best_value = -1
    best_subset: Optional[tuple[int, ...]] = None
    import itertools

    for size in range(g.n, 0, -1):
        if (size - 1) // 2 <= best_value:
            break
        for subset in itertools.combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, subset)
            val = _min_fun_value_over(sub, best_value)
            if val is not None:
                best_value = val
                best_subset = subset
    assert best_subset is not None
    sub, mapping = induced_subgraph(g, best_subset)
    inner = min_fun(sub)
    fn = WitnessFunction(
        mapping[inner.witness_vertex],
        tuple(mapping[x] for x in inner.witness_fn.support),
        dict(inner.witness_fn.table),
    )
    return FunResult(
        best_value,
        mapping[inner.witness_vertex],
        frozenset(mapping[x] for x in inner.witness_set),
        fn,
        subgraph=frozenset(best_subset),
    )


def fun_graph_lower(g: Graph, trials: int, seed: int) -> int:
    """Certified lower bound on fun(G): max of min_fun over G itself and
    ``trials`` seeded random induced subgraphs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    best = min_fun(g).value
    for _ in range(trials):
        subset = [v for v in range(g.n) if rng.random() < 0.5]
        if not subset:
            continue
        sub, _ = induced_subgraph(g, subset)
        val = _min_fun_value_over(sub, best)
        if val is not None:
            best = val
    return best

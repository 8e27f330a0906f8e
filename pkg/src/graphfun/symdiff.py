"""The symmetric-difference parameter sd(x,y) and its max-min graph form."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, induced_subgraph, sym_diff_mask


@dataclass(frozen=True)
class SdResult:
    value: int
    pair: tuple[int, int]
    subgraph: Optional[frozenset[int]] = None


def sd_pair(g: Graph, x: int, y: int) -> int:
    """|N(x) xor N(y)| excluding x and y themselves."""
    return sym_diff_mask(g, x, y).bit_count()


def min_sd(g: Graph) -> SdResult:
    """Minimum sd over all unordered pairs, lowest-index pair on ties."""
    if g.n < 2:
        raise ValueError("min_sd needs at least 2 vertices")
    best = None
    best_pair = None
    for x in range(g.n):
        for y in range(x + 1, g.n):
            v = sd_pair(g, x, y)
            if best is None or v < best:
                best, best_pair = v, (x, y)
                if best == 0:
                    return SdResult(0, best_pair)
    return SdResult(best, best_pair)


def _min_sd_value_over(g: Graph, cap: int) -> Optional[int]:
    """min_sd value if it exceeds cap, else None (early abort)."""
    best = None
    for x in range(g.n):
        for y in range(x + 1, g.n):
            v = sd_pair(g, x, y)
            if v <= cap:
                return None
            if best is None or v < best:
                best = v
    return best


def sd_graph(g: Graph, exact_limit: int = 14) -> SdResult:
    """Exact sd(G): max over induced subgraphs with >= 2 vertices of min_sd."""
    if g.n < 2:
        raise ValueError("sd_graph needs at least 2 vertices")
    if g.n > exact_limit:
        raise ValueError(f"n={g.n} exceeds exact_limit={exact_limit}")
    best_value = -1
    best_subset = None
    for size in range(g.n, 1, -1):
        for subset in itertools.combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, subset)
            val = _min_sd_value_over(sub, best_value)
            if val is not None:
                best_value = val
                best_subset = subset
    assert best_subset is not None
    sub, mapping = induced_subgraph(g, best_subset)
    inner = min_sd(sub)
    pair = (mapping[inner.pair[0]], mapping[inner.pair[1]])
    return SdResult(best_value, pair, subgraph=frozenset(best_subset))

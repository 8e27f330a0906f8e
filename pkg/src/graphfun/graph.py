"""Simple undirected graphs stored as immutable bit-adjacency matrices.

Vertices are dense 0-based indices.  Each adjacency row is a Python int
used as a bitmask, so neighbourhood algebra (symmetric difference,
intersection) is row-XOR/AND on ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  ``rows[v]`` has bit ``u`` set iff u ~ v."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= n")
        for v in range(self.n):
            for u in range(v):
                if (self.rows[v] >> u & 1) != (self.rows[u] >> v & 1):
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")

    @staticmethod
    def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge ({u},{v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.rows[v]))

    def closed_neighborhood_mask(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            rest = self.rows[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in _bits(rest))
        return out

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``, plus the map back to original indices.

    The new graph reindexes the selected vertices 0..|S|-1 in ascending
    original order; position i of the returned tuple is the original index
    of new vertex i.
    """
    order = sorted(set(vertices))
    if not order:
        raise ValueError("induced subgraph of the empty vertex set is undefined")
    if order[0] < 0 or order[-1] >= g.n:
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in _bits(g.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(order), tuple(rows)), tuple(order)


def sym_diff_mask(g: Graph, u: int, v: int) -> int:
    """Bitmask of (N(u) xor N(v)) minus {u, v}."""
    if u == v:
        raise ValueError("symmetric difference of a vertex with itself")
    return (g.rows[u] ^ g.rows[v]) & ~(1 << u) & ~(1 << v)


def sym_diff_neighborhoods(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices different from u and v adjacent to exactly one of u, v."""
    return frozenset(_bits(sym_diff_mask(g, u, v)))


def is_twin_pair(g: Graph, u: int, v: int) -> bool:
    return sym_diff_mask(g, u, v) == 0


# --- text format ------------------------------------------------------------
#
# '#'-prefixed comment lines are ignored.  First data line is "n m", followed
# by exactly m lines "u v" with 0 <= u < v < n and no duplicates.


class GraphFormatError(ValueError):
    pass


def parse_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise GraphFormatError("missing header line 'n m'")
    head = data[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"bad header line: {data[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header line: {data[0]!r}") from exc
    if len(data) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, got {len(data) - 1}")
    edges = []
    for ln in data[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {ln!r}") from exc
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u},{v}) violates 0 <= u < v < n")
        edges.append((u, v))
    try:
        return Graph.from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))

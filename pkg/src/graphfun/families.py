"""Deterministic generators for every graph family under study, plus the
seeded random instance generators used by the verification harness.

File formats:
  permutation  - one line of space-separated values of pi(1..n)
  intervals    - one rational left endpoint per line, as ``p/q`` or an integer
  hypergraph   - header ``n m`` followed by m lines ``a b c``
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class Permutation:
    """One-line permutation of 1..n."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.values)

    def position_of(self) -> dict[int, int]:
        """value -> 1-based position."""
        return {v: i for i, v in enumerate(self.values, start=1)}


@dataclass(frozen=True)
class IntervalSet:
    """Left endpoints of unit-length intervals [l, l+1], exact rationals.

    All 2n endpoints must be pairwise distinct; the correctness arguments
    about consecutive-pair symmetric differences rely on it.
    """

    lefts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        endpoints: dict[Fraction, str] = {}
        for i, l in enumerate(self.lefts):
            for point, tag in ((l, f"a{i}"), (l + 1, f"b{i}")):
                if point in endpoints:
                    raise ValueError(
                        f"duplicate endpoint {point} ({endpoints[point]} and {tag})"
                    )
                endpoints[point] = tag

    @property
    def n(self) -> int:
        return len(self.lefts)


@dataclass(frozen=True)
class Hypergraph3:
    """3-uniform hypergraph on ground set 0..n-1; hyperedge order matters
    (it fixes the vertex order of the intersection graph)."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for e in self.edges:
            if len(set(e)) != 3:
                raise ValueError(f"hyperedge {e} must have 3 distinct vertices")
            if any(v < 0 or v >= self.n for v in e):
                raise ValueError(f"hyperedge {e} out of range")
            key = tuple(sorted(e))
            if key in seen:
                raise ValueError(f"duplicate hyperedge {key}")
            seen.add(key)

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "Hypergraph3":
        return Hypergraph3(n, tuple(tuple(sorted(e)) for e in edges))


# --- deterministic constructions -------------------------------------------


def hypercube(n: int) -> Graph:
    """Q_n: vertices are n-bit values, edges at Hamming distance 1."""
    if not 1 <= n <= 20:
        raise ValueError("dimension must be in 1..20")
    size = 1 << n
    rows = []
    for v in range(size):
        row = 0
        for b in range(n):
            row |= 1 << (v ^ (1 << b))
        rows.append(row)
    return Graph(size, tuple(rows))


def permutation_graph(p: Permutation) -> Graph:
    """Vertices are the values 1..n stored 0-based; values a, b adjacent
    iff the pair is an inversion of the permutation."""
    pos = p.position_of()
    n = p.n
    rows = [0] * n
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if pos[a] > pos[b]:
                rows[a - 1] |= 1 << (b - 1)
                rows[b - 1] |= 1 << (a - 1)
    return Graph(n, tuple(rows))


def unit_interval_graph(iv: IntervalSet) -> Graph:
    """Intersection graph of the unit intervals, vertices ordered by left
    endpoint.  Exact rational comparisons throughout."""
    order = sorted(range(iv.n), key=lambda i: iv.lefts[i])
    lefts = [iv.lefts[i] for i in order]
    rows = [0] * iv.n
    for i in range(iv.n):
        for j in range(i + 1, iv.n):
            if lefts[j] - lefts[i] < 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(iv.n, tuple(rows))


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """L(G): one vertex per edge of G in lexicographic order; adjacency iff
    the edges share an endpoint.  The edge list maps vertices back."""
    edge_names = tuple(g.edges())
    if not edge_names:
        raise ValueError("line graph of an edgeless graph is undefined")
    m = len(edge_names)
    rows = [0] * m
    for i in range(m):
        a, b = edge_names[i]
        for j in range(i + 1, m):
            c, d = edge_names[j]
            if a in (c, d) or b in (c, d):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(m, tuple(rows)), edge_names


def shattering_graph(n: int) -> Graph:
    """Bipartite graph with parts A (n vertices) and B (2^n vertices);
    B-vertex n+c is adjacent to the A-members whose bit is set in c.
    Its closed-neighbourhood VC-dimension is exactly n."""
    if not 1 <= n <= 12:
        raise ValueError("part size must be in 1..12")
    total = n + (1 << n)
    rows = [0] * total
    for c in range(1 << n):
        v = n + c
        for a in range(n):
            if c >> a & 1:
                rows[v] |= 1 << a
                rows[a] |= 1 << v
    return Graph(total, tuple(rows))


def sd_construction(t: int) -> Permutation:
    """Sheared integer grid giving a permutation graph with every pairwise
    symmetric difference at least t.

    Uses integer-scaled coordinates X(i,j) = i(t+1) - j, Y(i,j) = i + j(t+1)
    for 0 <= i,j <= t; ranks are invariant under the positive scaling, so
    the arithmetic stays exact.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    pts = [(i * (t + 1) - j, i + j * (t + 1)) for i in range(t + 1) for j in range(t + 1)]
    ys = sorted(y for _, y in pts)
    rank = {y: r for r, y in enumerate(ys, start=1)}
    pts.sort()
    return Permutation(tuple(rank[y] for _, y in pts))


def distance_hereditary(script: Sequence[tuple[str, int]]) -> Graph:
    """Build a graph from a single vertex by the given steps, each one of
    ('pendant', u), ('true_twin', u) or ('false_twin', u)."""
    rows = [0]
    for step, u in script:
        if not 0 <= u < len(rows):
            raise ValueError(f"step {step}({u}) references a nonexistent vertex")
        v = len(rows)
        if step == "pendant":
            new_row = 1 << u
        elif step == "true_twin":
            new_row = rows[u] | (1 << u)
        elif step == "false_twin":
            new_row = rows[u]
        else:
            raise ValueError(f"unknown step kind {step!r}")
        rows.append(new_row)
        for w in range(v):
            if new_row >> w & 1:
                rows[w] |= 1 << v
    return Graph(len(rows), tuple(rows))


# --- seeded random generators ----------------------------------------------


def random_graph(n: int, p: float, seed: int) -> Graph:
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


def random_permutation(n: int, seed: int) -> Permutation:
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return Permutation(tuple(values))


def random_unit_intervals(n: int, seed: int) -> IntervalSet:
    """Distinct even numerators over an odd denominator: left endpoints
    differ by even/odd fractions while interval length 1 shifts a numerator
    by the odd denominator, so all 2n endpoints are distinct by construction."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    denom = 2 * n + 1
    numerators = rng.sample(range(0, 8 * n * denom, 2), n)
    return IntervalSet(tuple(Fraction(a, denom) for a in numerators))


def random_distance_hereditary_script(steps: int, seed: int) -> list[tuple[str, int]]:
    rng = random.Random(seed)
    script = []
    for k in range(steps):
        kind = rng.choice(("pendant", "true_twin", "false_twin"))
        script.append((kind, rng.randrange(k + 1)))
    return script


def random_3_hypergraph(n: int, m: int, seed: int) -> Hypergraph3:
    if n < 3:
        raise ValueError("need n >= 3")
    max_edges = n * (n - 1) * (n - 2) // 6
    if not 0 <= m <= max_edges:
        raise ValueError(f"need 0 <= m <= {max_edges}")
    rng = random.Random(seed)
    chosen: set[tuple[int, int, int]] = set()
    while len(chosen) < m:
        e = tuple(sorted(rng.sample(range(n), 3)))
        chosen.add(e)
    return Hypergraph3(n, tuple(sorted(chosen)))


# --- file formats ----------------------------------------------------------


def parse_permutation(text: str) -> Permutation:
    values = tuple(int(tok) for tok in text.split())
    return Permutation(values)


def format_permutation(p: Permutation) -> str:
    return " ".join(str(v) for v in p.values) + "\n"


def parse_intervals(text: str) -> IntervalSet:
    lefts = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        lefts.append(Fraction(ln))
    return IntervalSet(tuple(lefts))


def format_intervals(iv: IntervalSet) -> str:
    return "\n".join(str(l) for l in iv.lefts) + "\n"


def parse_hypergraph(text: str) -> Hypergraph3:
    data = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in data if ln and not ln.startswith("#")]
    if not data:
        raise ValueError("missing header line 'n m'")
    n, m = (int(tok) for tok in data[0].split())
    if len(data) - 1 != m:
        raise ValueError(f"expected {m} hyperedge lines, got {len(data) - 1}")
    edges = [tuple(int(tok) for tok in ln.split()) for ln in data[1:]]
    if any(len(e) != 3 for e in edges):
        raise ValueError("each hyperedge line needs exactly 3 vertices")
    return Hypergraph3.from_edges(n, edges)


def format_hypergraph(h: Hypergraph3) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"

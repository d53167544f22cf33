"""Simple undirected graphs on dense vertex ids, stored as per-row bitsets.

Row ``rows[v]`` has bit ``u`` set iff ``u ~ v``. Neighborhood equality tests
(``N(u) = N(v)``, ``N[u] = N[v]``) are therefore integer comparisons.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import Graph6Error, GraphError
from .util import iter_bits

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SHORT_MAX = 62
GRAPH6_LONG_MAX = 258047


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"Vertex count must be nonnegative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"Row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"Self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"Adjacency not symmetric on edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def open_row(self, v: int) -> int:
        return self.rows[v]

    def closed_row(self, v: int) -> int:
        return self.rows[v] | 1 << v

    def open_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.rows[v]))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.closed_row(v)))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, row in enumerate(self.rows):
            for u in iter_bits(row >> (v + 1) << (v + 1)):
                yield (v, u)

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.rows) if not row]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> u & 1 for u in range(self.n)] for row in self.rows]

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def random_graph(n: int, seed: int, p: float = 0.5) -> Graph:
    """Erdős–Rényi G(n, p), deterministic in (n, seed, p)."""
    rng = np.random.default_rng(seed)
    coins = rng.random(n * (n - 1) // 2) < p
    pairs = ((u, v) for v in range(n) for u in range(v))
    return Graph.from_edges(n, (e for e, hit in zip(pairs, coins, strict=True) if hit))


# ---------------------------------------------------------------------------
# Constructors over existing graphs
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.rows + tuple(row << shift for row in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    g_side = g.all_mask
    h_side = h.all_mask << g.n
    rows = tuple(row | h_side for row in g.rows) + tuple(
        (row << g.n) | g_side for row in h.rows
    )
    return Graph(g.n + h.n, rows)


def induced_subgraph(g: Graph, s: Sequence[int]) -> Graph:
    index: dict[int, int] = {}
    for i, v in enumerate(s):
        if not 0 <= v < g.n:
            raise GraphError(f"Vertex {v} out of range for n={g.n}")
        if v in index:
            raise GraphError(f"Vertex {v} listed twice")
        index[v] = i
    rows = []
    for v in s:
        row = 0
        for u in iter_bits(g.rows[v]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return Graph(len(s), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Vertex v of g becomes vertex perm[v] of the result."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError(f"Not a permutation of 0..{g.n - 1}: {list(perm)}")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def components_within(rows: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as bitmasks.

    Ordered by minimum vertex id.
    """
    out: list[int] = []
    remaining = mask
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= rows[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def connected_components(g: Graph) -> list[list[int]]:
    return [list(iter_bits(c)) for c in components_within(g.rows, g.all_mask)]


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def _edge_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def strip_graph6_header(text: str) -> tuple[str, int]:
    """Drop surrounding whitespace and an optional ``>>graph6<<`` header.

    Returns the body and its offset in the header-stripped input.
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        return s[len(GRAPH6_HEADER) :], len(GRAPH6_HEADER)
    return s, 0


def _validate_graph6(s: str, base: int) -> None:
    # networkx reports malformed input without byte offsets, so the framing
    # is checked here first
    if not s:
        raise Graph6Error("empty input", base)

    data = [ord(ch) for ch in s]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {s[i]!r} outside 63..126", base + i)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        raise Graph6Error(f"8-byte size form unsupported (n > {GRAPH6_LONG_MAX})", base)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated size field", base + len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n <= GRAPH6_SHORT_MAX:
            raise Graph6Error(f"long size form used for n={n}", base)

    nbits = _edge_bit_count(n)
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} edge bytes, got {len(body)}", base + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage", base + pos + nbytes)
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + nbytes - 1)


def from_networkx(G: nx.Graph) -> Graph:
    """Convert a networkx graph, taking node ids in iteration order."""
    index = {v: i for i, v in enumerate(G)}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in G.edges()))


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def parse_graph6(text: str) -> Graph:
    s, base = strip_graph6_header(text)
    _validate_graph6(s, base)
    try:
        G = nx.from_graph6_bytes(s.encode("ascii"))
    except nx.NetworkXError as e:
        raise Graph6Error(str(e), base) from e
    return from_networkx(G)


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_LONG_MAX:
        raise GraphError(f"graph6 writer supports n <= {GRAPH6_LONG_MAX}, got {g.n}")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip("\n")

"""Immutable simple undirected graphs with bitset adjacency.

Vertices are the integers ``0..n-1`` and each adjacency row is an int
bitmask (see :mod:`metric_lines.bitset`), so neighborhood algebra is
word-sized.  Graphs are values: hashable, comparable, safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import bitset
from .errors import (
    Disconnected,
    IndexOutOfRange,
    SelfLoop,
    TooManyVertices,
)

MAX_VERTICES = 64


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``adj[i]`` is the neighbor bitmask of vertex ``i``.  The adjacency is
    symmetric and irreflexive by construction; instances never mutate.
    """

    __slots__ = ("n", "adj")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)

    def neighbors(self, v: int) -> int:
        """Neighbor set of ``v`` as a bitmask (N(v))."""
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return (self.adj[i] >> j) & 1 == 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (i, j) with i < j, in lexicographic order."""
        for i in range(self.n):
            for j in bitset.indices(self.adj[i] >> (i + 1)):
                yield i, i + 1 + j

    def vertex_mask(self) -> int:
        """The full vertex set {0, ..., n-1} as a bitmask."""
        return (1 << self.n) - 1

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """The graph with vertex i renamed to perm[i]."""
        adj = [0] * self.n
        for i in range(self.n):
            row = 0
            for j in bitset.indices(self.adj[i]):
                row |= 1 << perm[j]
            adj[perm[i]] = row
        return Graph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


class DistanceMatrix:
    """All-pairs hop distances of a connected graph."""

    __slots__ = ("n", "d")

    n: int
    d: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, d: Sequence[Sequence[int]]):
        self.n = n
        self.d = tuple(tuple(row) for row in d)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.d[i][j]

    def max_distance(self) -> int:
        return max(max(row) for row in self.d)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Raises TooManyVertices, IndexOutOfRange or SelfLoop on bad input.
    """
    if n < 1 or n > MAX_VERTICES:
        raise TooManyVertices(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, adj)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0 over bitmask frontiers."""
    seen = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        for v in bitset.indices(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances via one bitset BFS per vertex.

    Raises Disconnected when some pair is unreachable: the package works
    with finite metrics only, so there is no sentinel distance.
    """
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        dist = [0] * n
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bitset.indices(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in bitset.indices(frontier):
                dist[v] = d
        if seen != full:
            raise Disconnected("distance matrix of a disconnected graph")
        rows.append(dist)
    return DistanceMatrix(n, rows)


def diameter(g: Graph) -> int:
    """Largest pairwise distance.  Raises Disconnected."""
    return distance_matrix(g).max_distance()


def has_diameter_at_most_two(g: Graph) -> bool:
    """True iff every non-adjacent pair has a common neighbor.

    This single pair scan implies connectivity for n >= 2, so the hot
    enumeration loops use it instead of a BFS diameter.
    """
    n = g.n
    adj = g.adj
    for i in range(n - 1):
        row = adj[i]
        for j in range(i + 1, n):
            if not (row >> j) & 1 and not (row & adj[j]):
                return False
    return True


def is_complete(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return all(g.adj[v] == full ^ (1 << v) for v in range(g.n))


def has_diameter_two(g: Graph) -> bool:
    """Diameter exactly two, by pair scan; False for complete graphs."""
    return g.n >= 2 and has_diameter_at_most_two(g) and not is_complete(g)


def neighbors2(g: Graph, x: int) -> int:
    """The non-neighbors of ``x`` other than ``x`` itself, as a bitmask.

    In a diameter-two graph this is exactly the set of vertices at
    distance two from ``x``; together with N(x) and {x} it partitions V,
    so ``n == degree(x) + size(neighbors2(x)) + 1``.
    """
    return g.vertex_mask() & ~g.adj[x] & ~(1 << x)

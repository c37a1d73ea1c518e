"""Lines of a graph metric.

The line through two distinct vertices x, y is the set of vertices z
collinear with them: some ordering of the three has additive distances,
which for hop metrics is the same as saying a shortest path contains all
three.  At diameter two the line collapses to a closed form on
neighborhoods:

    x, y non-adjacent:  {x, y} | (N(x) & N(y))
    x, y adjacent:      {x, y} | (N(x) ^ N(y))

Both forms, the deduplicated line set, and the per-pivot decomposition
used to analyse line counts live here.  Lines are vertex bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from . import bitset
from .errors import EqualVertices, WrongDiameter
from .graph import DistanceMatrix, Graph, distance_matrix


class LineSet:
    """Deduplicated lines of a graph, iterated in bit-pattern order."""

    __slots__ = ("n", "_lines")

    def __init__(self, n: int, masks) -> None:
        self.n = n
        self._lines = tuple(sorted(set(masks)))

    def __len__(self) -> int:
        return len(self._lines)

    def __iter__(self) -> Iterator[int]:
        return iter(self._lines)

    def __contains__(self, mask: int) -> bool:
        return mask in self._lines

    def masks(self) -> tuple[int, ...]:
        return self._lines

    def has_universal(self) -> bool:
        return ((1 << self.n) - 1) in self._lines

    def as_indices(self) -> tuple[tuple[int, ...], ...]:
        """Each line as a sorted tuple of vertex indices."""
        return tuple(bitset.to_tuple(m) for m in self._lines)

    def __repr__(self) -> str:
        return f"LineSet(n={self.n}, lines={len(self._lines)})"


def line_general(d: DistanceMatrix, x: int, y: int) -> int:
    """Line through x, y from the distance matrix (any diameter)."""
    if x == y:
        raise EqualVertices("a line needs two distinct vertices")
    row_x = d.d[x]
    row_y = d.d[y]
    dxy = row_x[y]
    line = (1 << x) | (1 << y)
    for z in range(d.n):
        dxz = row_x[z]
        dyz = row_y[z]
        if dxz + dyz == dxy or dxy + dyz == dxz or dxy + dxz == dyz:
            line |= 1 << z
    return line


def _pair_line_diam2(adj, x: int, y: int) -> int:
    pair = (1 << x) | (1 << y)
    if (adj[x] >> y) & 1:
        return pair | (adj[x] ^ adj[y])
    return pair | (adj[x] & adj[y])


def line_diam2(g: Graph, x: int, y: int) -> int:
    """Closed-form line through x, y; the graph must have diameter two."""
    if x == y:
        raise EqualVertices("a line needs two distinct vertices")
    if distance_matrix(g).max_distance() != 2:
        raise WrongDiameter("closed forms require diameter exactly two")
    return _pair_line_diam2(g.adj, x, y)


def _line_masks(g: Graph) -> set[int]:
    # connectivity is checked by the distance matrix
    d = distance_matrix(g)
    n = g.n
    out: set[int] = set()
    if d.max_distance() <= 2:
        adj = g.adj
        for x in range(n - 1):
            for y in range(x + 1, n):
                out.add(_pair_line_diam2(adj, x, y))
    else:
        for x in range(n - 1):
            for y in range(x + 1, n):
                out.add(line_general(d, x, y))
    return out


def line_set(g: Graph) -> LineSet:
    """All distinct lines of a connected graph."""
    return LineSet(g.n, _line_masks(g))


def count_lines(g: Graph) -> int:
    """Number of distinct lines."""
    return len(_line_masks(g))


def has_universal_line(g: Graph) -> bool:
    """True iff some line is the entire vertex set."""
    full = g.vertex_mask()
    d = distance_matrix(g)
    n = g.n
    if d.max_distance() <= 2:
        adj = g.adj
        for x in range(n - 1):
            for y in range(x + 1, n):
                if _pair_line_diam2(adj, x, y) == full:
                    return True
        return False
    for x in range(n - 1):
        for y in range(x + 1, n):
            if line_general(d, x, y) == full:
                return True
    return False


@dataclass(frozen=True)
class PivotDecomposition:
    """Lines through a pivot x, split by where the second vertex lives.

    ``l1`` collects lines to neighbors of x (with how many neighbors
    generate each), ``l2`` lines to non-neighbors.  ``classes``
    partitions N(x) by equal lines: u, v share a class iff the lines
    through (x, u) and (x, v) coincide.  At diameter two ``l2`` has
    exactly one line per non-neighbor.
    """

    x: int
    l1: LineSet
    l1_counts: Mapping[int, int]
    l2: LineSet
    classes: tuple[int, ...]


def pivot_decomposition(g: Graph, x: int) -> PivotDecomposition:
    """Decompose the lines through x; requires diameter exactly two."""
    if distance_matrix(g).max_distance() != 2:
        raise WrongDiameter("pivot decomposition requires diameter exactly two")
    adj = g.adj
    l1_counts: dict[int, int] = {}
    by_line: dict[int, int] = {}
    for a in bitset.indices(adj[x]):
        ln = _pair_line_diam2(adj, x, a)
        l1_counts[ln] = l1_counts.get(ln, 0) + 1
        by_line[ln] = by_line.get(ln, 0) | (1 << a)
    l2 = []
    for b in bitset.indices(g.vertex_mask() & ~adj[x] & ~(1 << x)):
        l2.append(_pair_line_diam2(adj, x, b))
    classes = tuple(sorted(by_line.values()))
    return PivotDecomposition(
        x=x,
        l1=LineSet(g.n, l1_counts.keys()),
        l1_counts=l1_counts,
        l2=LineSet(g.n, l2),
        classes=classes,
    )


def is_independent(g: Graph, s: int) -> bool:
    """True iff the bitmask s spans no edge."""
    for v in bitset.indices(s):
        if g.adj[v] & s:
            return False
    return True


def is_module(g: Graph, s: int) -> bool:
    """True iff every vertex outside s sees all of s or none of it."""
    for w in bitset.indices(g.vertex_mask() & ~s):
        inside = g.adj[w] & s
        if inside and inside != s:
            return False
    return True

"""graph6 codec and the plain edge-list text format.

graph6 is the header-less printable-ASCII encoding of simple undirected
graphs: the vertex count, then the upper triangle of the adjacency
matrix read column by column ((0,1), (0,2), (1,2), (0,3), ...) packed
big-endian into 6-bit groups, each offset by 63.  Decoding is strict:
bad characters, truncated payloads, trailing characters and nonzero
padding bits are all rejected.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import FormatError, TooManyVertices
from .graph import MAX_VERTICES, Graph, from_edges


def _pair_bits(g: Graph) -> Iterator[int]:
    # upper triangle in column-major order, the same order canonical
    # codes use
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            yield (col >> i) & 1


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no ``>>graph6<<`` header)."""
    if g.n <= 62:
        out = [chr(g.n + 63)]
    else:
        # 18-bit size form covers everything up to the 64-vertex cap
        out = [
            "~",
            chr(((g.n >> 12) & 0x3F) + 63),
            chr(((g.n >> 6) & 0x3F) + 63),
            chr((g.n & 0x3F) + 63),
        ]
    group = 0
    filled = 0
    for bit in _pair_bits(g):
        group = (group << 1) | bit
        filled += 1
        if filled == 6:
            out.append(chr(group + 63))
            group = 0
            filled = 0
    if filled:
        group <<= 6 - filled
        out.append(chr(group + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string.  Raises FormatError on malformed input."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise FormatError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] == 63:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size field")
        if vals[1] == 63:
            raise FormatError("graph6 sizes beyond 2^18 are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    if n < 1:
        raise FormatError("graph6 graph must have at least one vertex")
    if n > MAX_VERTICES:
        raise TooManyVertices(f"graph6 graph has {n} vertices; cap is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(data) != ngroups:
        raise FormatError(
            f"graph6 payload for n={n} needs {ngroups} characters, got {len(data)}"
        )
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (data[pos // 6] >> (5 - pos % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    # padding bits after the triangle must be zero
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero padding bits in graph6 payload")
    return Graph(n, adj)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a one-graph-per-line stream, skipping blank lines."""
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield from_graph6(stripped)
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc


def write_edge_list(g: Graph, out: TextIO) -> None:
    """Write the ``n m`` / ``i j`` edge-list text format."""
    edges = list(g.edges())
    out.write(f"{g.n} {len(edges)}\n")
    for i, j in edges:
        out.write(f"{i} {j}\n")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format: first line ``n m``, then m lines ``i j``."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'i j' edge line, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"non-integer edge line {ln!r}") from exc
    return from_edges(n, edges)

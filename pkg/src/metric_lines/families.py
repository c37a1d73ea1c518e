"""Named graph constructors with frozen vertex labelings.

The ten diameter-two graphs with fewer lines than vertices, plus the
three diameter-three relatives.  Labelings are fixed so fixtures and
graph6 strings are byte-stable:

    K12     path 0-1-2
    K22     4-cycle 0-1-2-3-0
    K23     parts {0,1} and {2,3,4}
    K122    parts {2,3}, {0,1}, {4}   (vertex order a, c, x, b, d)
    K122p   K122 minus the edge (2,4)
    K122pp  the house: 5-cycle 2-0-3-4-1-2 with chord (0,1)
    M6      M2p(3): triangles {0,1,2}, {3,4,5}, matching (i, i+3)
    K6p     Kprime2p(3): parts {i, i+3}
    M8      M2p(4)
    K8p     Kprime2p(4)
    M6minus M6 minus the matching edge (0,3)
    M8minus M8 minus the matching edge (0,4)
    M8hat   M8 with the first clique reduced to the perfect matching
            {(0,2), (1,3)} (the 4-cycle 0-1-2-3-0 deleted)

The 5-vertex labelings follow one vertex order (a, c, x, b, d) ->
(0, 1, 2, 3, 4), so e.g. the K23 part {x, b, d} is {2, 3, 4}.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .errors import BadParameter
from .graph import Graph, from_edges


class FamilyName(str, Enum):
    """Tags for the thirteen named constructions."""

    K12 = "K12"
    K22 = "K22"
    K23 = "K23"
    K122 = "K122"
    K122p = "K122p"
    K122pp = "K122pp"
    M6 = "M6"
    K6p = "K6p"
    M8 = "M8"
    K8p = "K8p"
    M6minus = "M6minus"
    M8minus = "M8minus"
    M8hat = "M8hat"


#: The ten diameter-two members, in canonical listing order.
CORE_FAMILY = (
    FamilyName.K12,
    FamilyName.K22,
    FamilyName.K23,
    FamilyName.K122,
    FamilyName.K122p,
    FamilyName.K122pp,
    FamilyName.M6,
    FamilyName.K6p,
    FamilyName.M8,
    FamilyName.K8p,
)

#: The diameter-three relatives from the same constructions.
DIAMETER3_FAMILY = (
    FamilyName.M6minus,
    FamilyName.M8minus,
    FamilyName.M8hat,
)

ALL_FAMILY = CORE_FAMILY + DIAMETER3_FAMILY


def complete(p: int) -> Graph:
    """The complete graph on p vertices."""
    if p < 1:
        raise BadParameter(f"complete graph needs p >= 1, got {p}")
    return from_edges(p, [(a, b) for a in range(p) for b in range(a + 1, p)])


def matched_cliques(p: int) -> Graph:
    """Two p-cliques {0..p-1} and {p..2p-1} joined by the matching (i, i+p)."""
    if p < 2:
        raise BadParameter(f"matched cliques need p >= 2, got {p}")
    edges = []
    for a in range(p):
        for b in range(a + 1, p):
            edges.append((a, b))
            edges.append((a + p, b + p))
    for i in range(p):
        edges.append((i, i + p))
    return from_edges(2 * p, edges)


def cocktail_party(p: int) -> Graph:
    """Complete multipartite graph with p parts of size two: parts {i, i+p}."""
    if p < 2:
        raise BadParameter(f"cocktail party graph needs p >= 2, got {p}")
    edges = [
        (a, b)
        for a in range(2 * p)
        for b in range(a + 1, 2 * p)
        if b - a != p
    ]
    return from_edges(2 * p, edges)


def _without(g: Graph, removed: list[tuple[int, int]]) -> Graph:
    drop = {tuple(sorted(e)) for e in removed}
    return from_edges(g.n, [e for e in g.edges() if e not in drop])


_FIXED_EDGES: dict[FamilyName, tuple[int, list[tuple[int, int]]]] = {
    FamilyName.K12: (3, [(0, 1), (1, 2)]),
    FamilyName.K22: (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    FamilyName.K23: (5, [(a, b) for a in (0, 1) for b in (2, 3, 4)]),
    FamilyName.K122: (
        5,
        [(2, 0), (2, 1), (3, 0), (3, 1), (2, 4), (3, 4), (0, 4), (1, 4)],
    ),
    FamilyName.K122p: (
        5,
        [(2, 0), (2, 1), (3, 0), (3, 1), (3, 4), (0, 4), (1, 4)],
    ),
    FamilyName.K122pp: (
        5,
        [(2, 0), (0, 3), (3, 4), (4, 1), (1, 2), (0, 1)],
    ),
}


def named(tag: FamilyName | str) -> Graph:
    """Build a named family member in its frozen labeling."""
    tag = FamilyName(tag)
    if tag in _FIXED_EDGES:
        n, edges = _FIXED_EDGES[tag]
        return from_edges(n, edges)
    if tag is FamilyName.M6:
        return matched_cliques(3)
    if tag is FamilyName.M8:
        return matched_cliques(4)
    if tag is FamilyName.K6p:
        return cocktail_party(3)
    if tag is FamilyName.K8p:
        return cocktail_party(4)
    if tag is FamilyName.M6minus:
        return _without(matched_cliques(3), [(0, 3)])
    if tag is FamilyName.M8minus:
        return _without(matched_cliques(4), [(0, 4)])
    if tag is FamilyName.M8hat:
        return _without(matched_cliques(4), [(0, 1), (1, 2), (2, 3), (0, 3)])
    raise BadParameter(f"unknown family tag {tag!r}")


def parse_family_tag(text: str) -> Optional[FamilyName]:
    """Look up a tag string, case-sensitively; None when unknown."""
    try:
        return FamilyName(text)
    except ValueError:
        return None

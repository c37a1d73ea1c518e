"""Vertex sets as integer bitmasks.

Every vertex set in this package (neighborhoods, lines, equivalence
classes) is a plain ``int`` whose bit ``i`` marks vertex ``i``.  With the
vertex count capped at 64 a set fits one machine word, so union,
intersection, difference and complement are single operations and
equality of lines is integer equality.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def from_indices(indices: Iterable[int]) -> int:
    """Build a mask from vertex indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_tuple(mask: int) -> tuple[int, ...]:
    """The members of ``mask`` as a sorted tuple of vertex indices."""
    return tuple(indices(mask))


def size(mask: int) -> int:
    """Number of members."""
    return mask.bit_count()


def full(n: int) -> int:
    """The set {0, ..., n-1}."""
    return (1 << n) - 1


def contains(mask: int, v: int) -> bool:
    return (mask >> v) & 1 == 1

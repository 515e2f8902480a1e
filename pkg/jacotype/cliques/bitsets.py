"""Bitmask adjacency used by the clique searches.

Bit ``i`` stands for vertex v_i; bit 0 is unused.
"""

from __future__ import annotations

from collections.abc import Iterator

from jacotype.graphs.base import CliqueGraph


def adjacency_masks(g: CliqueGraph) -> list[int]:
    """masks[i] has bit j set iff v_i and v_j are adjacent; masks[0] = 0."""
    masks = [0] * (g.order + 1)
    for i in range(1, g.order + 1):
        m = 0
        for j in g.neighbors(i):
            m |= 1 << j
        masks[i] = m
    return masks


def all_vertices_mask(n: int) -> int:
    return ((1 << (n + 1)) - 1) ^ 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(members: frozenset[int] | set[int] | tuple[int, ...] | list[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def members_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def is_clique_mask(mask: int, masks: list[int]) -> bool:
    """True if the vertices in *mask* are pairwise adjacent."""
    for v in iter_bits(mask):
        if (mask ^ (1 << v)) & ~masks[v]:
            return False
    return True

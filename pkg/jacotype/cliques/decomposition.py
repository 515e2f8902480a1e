"""Predicted maximal-clique structure of the positive-integer family J_n(s1).

In J_∞(s1) vertex v_i reaches exactly v_{i+1}..v_{2i}, so the untruncated
maximal cliques are M_i = {v_i, ..., v_{2i}} of size i + 1.
"""

from __future__ import annotations

from jacotype.errors import InvalidArgumentError


def s1_decomposition_sizes(n: int) -> tuple[int, ...]:
    """Sizes of the maximal cliques of J_n(s1), ascending.

    Even n: 2, 3, ..., n/2 + 1. Odd n >= 3: 2, 3, ..., (n+1)/2 with the top
    size twice. n = 1: (1,).
    """
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    if n == 1:
        return (1,)
    if n % 2 == 0:
        return tuple(range(2, n // 2 + 2))
    top = (n + 1) // 2
    return tuple(range(2, top + 1)) + (top,)


def s1_maximal_clique_count(n: int) -> int:
    """ceil(n / 2)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return (n + 1) // 2


def untruncated_s1_clique(i: int) -> frozenset[int]:
    """M_i = {v_i .. v_2i} in J_∞(s1)."""
    if i < 1:
        raise InvalidArgumentError(f"index must be >= 1, got {i}")
    return frozenset(range(i, 2 * i + 1))


def s1_clique_intersection(l: int, t: int) -> int:
    """|K_l ∩ K_{l+t}| for the untruncated maximal cliques of sizes l and l + t."""
    if l < 2 or t < 0:
        raise InvalidArgumentError(f"need l >= 2 and t >= 0, got l={l}, t={t}")
    return len(untruncated_s1_clique(l - 1) & untruncated_s1_clique(l + t - 1))

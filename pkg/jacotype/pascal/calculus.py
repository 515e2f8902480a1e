"""Closed-form clique calculus on complete graphs and single-vertex joins.

η^{K_l}(K_n) = C(n, l); every vertex of K_n lies in C(n-1, l-1) l-cliques;
joining a universal vertex maps η^{K_{l+1}} to η^{K_{l+1}} + η^{K_l}.
"""

from __future__ import annotations

from jacotype.cliques.census import CliqueCensus
from jacotype.config import TOTAL_CLIQUES_CAP, U64_MAX
from jacotype.errors import CountOverflowError, InvalidArgumentError


def binomial(n: int, l: int) -> int:
    """C(n, l) by the multiplicative method with exact division per step.

    Raises :class:`CountOverflowError` instead of leaving the 64-bit range.
    """
    if n < 0 or l < 0:
        raise InvalidArgumentError(f"binomial needs non-negative arguments, got ({n}, {l})")
    if l > n:
        return 0
    l = min(l, n - l)
    result = 1
    for step in range(1, l + 1):
        # result is C(n - l + step, step) after this line
        result = result * (n - l + step) // step
        if result > U64_MAX:
            raise CountOverflowError(f"C({n}, {l}) exceeds the 64-bit range")
    return result


def eta_complete(n: int, l: int) -> int:
    """η^{K_l}(K_n); l = 0 counts the empty clique."""
    return binomial(n, l)


def total_cliques(n: int) -> int:
    """Non-empty cliques of K_n: 2^n - 1."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    if n > TOTAL_CLIQUES_CAP:
        raise CountOverflowError(f"2^{n} - 1 exceeds the signed 64-bit range")
    return (1 << n) - 1


def complete_clique_degree(n: int, l: int) -> int:
    """d^{K_l}(v) in K_n = C(n-1, l-1)."""
    if n < 1 or not 1 <= l <= n:
        raise InvalidArgumentError(f"need 1 <= l <= n, got n={n}, l={l}")
    return binomial(n - 1, l - 1)


def complete_clique_degree_printed(n: int, l: int) -> int | None:
    """The product (n-1)...(n-l+1) / n! as printed; None when not an integer."""
    if n < 1 or not 1 <= l <= n:
        raise InvalidArgumentError(f"need 1 <= l <= n, got n={n}, l={l}")
    numerator = 1
    for j in range(1, l):
        numerator *= n - j
    denominator = 1
    for j in range(2, n + 1):
        denominator *= j
    if numerator % denominator:
        return None
    return numerator // denominator


def max_degree_clique_sizes(n: int) -> frozenset[int]:
    """Sizes l maximising d^{K_l}(v) in K_n: {ceil(n/2)} odd, {n/2, n/2 + 1} even."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    if n % 2:
        return frozenset({(n + 1) // 2})
    return frozenset({n // 2, n // 2 + 1})


def max_census_sizes(n: int) -> frozenset[int]:
    """Sizes t >= 1 maximising η^{K_t}(K_n): {n/2} even, {floor, ceil of n/2} odd."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    if n == 1:
        return frozenset({1})
    if n % 2 == 0:
        return frozenset({n // 2})
    return frozenset({n // 2, n // 2 + 1})


def join_census(census: CliqueCensus) -> CliqueCensus:
    """Census of G + K_1 from the census of G (uses η^{K_0} = 1)."""
    old = (1,) + census.counts
    new: list[int] = []
    for l in range(1, len(old) + 1):
        above = old[l] if l < len(old) else 0
        value = above + old[l - 1]
        if value > U64_MAX:
            raise CountOverflowError(f"η^(K_{l}) of the join exceeds the 64-bit range")
        new.append(value)
    return CliqueCensus(counts=tuple(new), include_empty=census.include_empty, order=census.order + 1)


def complete_census(n: int) -> CliqueCensus:
    """Census of K_n, row n of the complete-graph table."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return CliqueCensus(counts=tuple(binomial(n, l) for l in range(1, n + 1)), order=n)

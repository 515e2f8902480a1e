"""Exact term generation for the out-degree sequence families.

All arithmetic is integer-only; Fibonacci terms grow without bound and the
linear-Jaco floor never touches floating point.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence

from jacotype.errors import IndexOutOfRangeError, InvalidArgumentError
from jacotype.sequences.spec import PAPER_FIGURE_SET_TERMS, SequenceSpec


def fibonacci_number(i: int) -> int:
    """Return f_i with f_0 = 0, f_1 = f_2 = 1 (fast doubling)."""
    if i < 0:
        raise InvalidArgumentError(f"Fibonacci index must be >= 0, got {i}")

    def _pair(m: int) -> tuple[int, int]:
        if m == 0:
            return 0, 1
        a, b = _pair(m >> 1)
        c = a * (2 * b - a)
        d = a * a + b * b
        if m & 1:
            return d, c + d
        return c, d

    return _pair(i)[0]


def linear_jaco_term(i: int) -> int:
    """Return i - floor(2(i+1) / (3 + sqrt 5)) exactly.

    floor(2m / (3 + sqrt 5)) = floor(m (3 - sqrt 5) / 2) with m = i + 1.
    sqrt(5 m^2) is irrational, so with t = isqrt(5 m^2) the value lies
    strictly inside ((3m - t - 1) / 2, (3m - t) / 2).
    """
    m = i + 1
    t = math.isqrt(5 * m * m)
    return i - (3 * m - t - 1) // 2


def subset_at(base: int, idx: int) -> frozenset[int]:
    """Return the idx-th non-empty subset of {1..base} in the conventional order.

    The order lists all 1-subsets ascending, then the 2-subsets in
    lexicographic order, and so on up to the full set.
    """
    if base < 1:
        raise InvalidArgumentError(f"base must be >= 1, got {base}")
    total = (1 << base) - 1
    if not 1 <= idx <= total:
        raise IndexOutOfRangeError(f"subset index {idx} outside 1..{total}")

    rank = idx - 1
    size = 1
    while rank >= math.comb(base, size):
        rank -= math.comb(base, size)
        size += 1

    # Unrank the lexicographic combination of `size` elements.
    chosen: list[int] = []
    candidate = 1
    remaining = size
    while remaining:
        block = math.comb(base - candidate, remaining - 1)
        if rank < block:
            chosen.append(candidate)
            remaining -= 1
        else:
            rank -= block
        candidate += 1
    return frozenset(chosen)


def set_sequence_term(base: int, i: int, variant: str = "definitional") -> int:
    """Out-degree of v_i in the set family (period 2^base - 1)."""
    if variant == "paper-figure":
        period = len(PAPER_FIGURE_SET_TERMS)
        return PAPER_FIGURE_SET_TERMS[(i - 1) % period]
    period = (1 << base) - 1
    return sum(subset_at(base, 1 + (i - 1) % period))


def sequence_term(spec: SequenceSpec, i: int) -> int:
    """Return a_i of the family described by *spec* (1-indexed)."""
    if i < 1:
        raise InvalidArgumentError(f"sequence index must be >= 1, got {i}")
    spec.check()

    if spec.kind == "positive-integers":
        return i
    if spec.kind == "fibonacci":
        return fibonacci_number(i)
    if spec.kind == "modulo-k":
        assert spec.k is not None
        return i % spec.k
    if spec.kind == "set-sequence":
        assert spec.base is not None
        return set_sequence_term(spec.base, i, spec.set_variant)
    if spec.kind == "linear-jaco":
        return linear_jaco_term(i)
    if spec.kind == "explicit":
        terms = spec.terms or ()
        if i > len(terms):
            raise IndexOutOfRangeError(
                f"explicit sequence has {len(terms)} terms; index {i} requested"
            )
        return terms[i - 1]
    raise InvalidArgumentError(f"unknown sequence kind: {spec.kind}")


def iter_terms(spec: SequenceSpec, count: int, start: int = 1) -> Iterator[int]:
    """Yield a_start .. a_{start+count-1}; Fibonacci runs iteratively."""
    if start < 1:
        raise InvalidArgumentError(f"sequence index must be >= 1, got {start}")
    spec.check()
    if spec.kind == "fibonacci":
        a, b = fibonacci_number(start), fibonacci_number(start + 1)
        for _ in range(count):
            yield a
            a, b = b, a + b
        return
    for i in range(start, start + count):
        yield sequence_term(spec, i)


def is_non_decreasing(terms: Sequence[int]) -> bool:
    """True if every term is at least its predecessor."""
    return all(a <= b for a, b in zip(terms, terms[1:]))

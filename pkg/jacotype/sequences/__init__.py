"""Out-degree sequence families: positive integers, Fibonacci, modulo k, set, linear Jaco, explicit."""

from jacotype.sequences.generator import (
    fibonacci_number,
    is_non_decreasing,
    iter_terms,
    linear_jaco_term,
    sequence_term,
    subset_at,
)
from jacotype.sequences.loader import load_explicit_spec, parse_terms
from jacotype.sequences.spec import FAMILY_ALIASES, SequenceSpec

__all__ = [
    "FAMILY_ALIASES",
    "SequenceSpec",
    "fibonacci_number",
    "is_non_decreasing",
    "iter_terms",
    "linear_jaco_term",
    "load_explicit_spec",
    "parse_terms",
    "sequence_term",
    "subset_at",
]

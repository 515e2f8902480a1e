"""Load explicit sequences from plain-text files.

File format: one non-negative decimal integer per line, 1-indexed; blank
lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import logging
from pathlib import Path

from jacotype.errors import InvalidArgumentError
from jacotype.sequences.spec import SequenceSpec

logger = logging.getLogger(__name__)


def parse_terms(text: str, source: str = "<string>") -> tuple[int, ...]:
    """Parse sequence text into a tuple of terms."""
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.isdigit():
            raise InvalidArgumentError(
                f"{source}:{lineno}: expected a non-negative integer, got {line!r}"
            )
        terms.append(int(line))
    if not terms:
        raise InvalidArgumentError(f"{source}: no terms found")
    return tuple(terms)


def load_explicit_spec(path: str | Path) -> SequenceSpec:
    """Read *path* and return an explicit :class:`SequenceSpec`."""
    p = Path(path)
    terms = parse_terms(p.read_text(encoding="utf-8"), source=str(p))
    logger.debug("Loaded %d terms from %s", len(terms), p)
    return SequenceSpec.explicit(terms)

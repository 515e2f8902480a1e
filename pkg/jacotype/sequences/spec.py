"""SequenceSpec — declarative description of an out-degree sequence family."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict

from jacotype.errors import InvalidArgumentError

SequenceKind = Literal[
    "positive-integers",
    "fibonacci",
    "modulo-k",
    "set-sequence",
    "linear-jaco",
    "explicit",
]

SetVariant = Literal["definitional", "paper-figure"]

# Short family names used by the CLI and in reports.
FAMILY_ALIASES: dict[str, SequenceKind] = {
    "s1": "positive-integers",
    "s2": "fibonacci",
    "s3": "modulo-k",
    "s4": "set-sequence",
    "linear": "linear-jaco",
    "custom": "explicit",
}

# The printed figure for the set family lists these seven terms for base 3.
PAPER_FIGURE_SET_TERMS: tuple[int, ...] = (1, 2, 3, 4, 4, 5, 6)


class SequenceSpec(BaseModel):
    """Which sequence family generates the out-degrees, plus its parameters.

    Construct through the classmethods (:meth:`positive_integers`,
    :meth:`fibonacci`, ...) or directly; :meth:`check` enforces the
    per-family parameter rules.
    """

    model_config = ConfigDict(frozen=True)

    kind: SequenceKind
    k: int | None = None
    """Modulus, modulo-k only (k >= 2)."""

    base: int | None = None
    """Ground set {1..base}, set-sequence only."""

    terms: tuple[int, ...] | None = None
    """Literal terms a_1..a_m, explicit only."""

    set_variant: SetVariant = "definitional"

    # -- Factories ----------------------------------------------------------

    @classmethod
    def positive_integers(cls) -> SequenceSpec:
        return cls(kind="positive-integers")

    @classmethod
    def fibonacci(cls) -> SequenceSpec:
        return cls(kind="fibonacci")

    @classmethod
    def modulo(cls, k: int) -> SequenceSpec:
        return cls(kind="modulo-k", k=k).check()

    @classmethod
    def set_sequence(cls, base: int, variant: SetVariant = "definitional") -> SequenceSpec:
        return cls(kind="set-sequence", base=base, set_variant=variant).check()

    @classmethod
    def linear_jaco(cls) -> SequenceSpec:
        return cls(kind="linear-jaco")

    @classmethod
    def explicit(cls, terms: list[int] | tuple[int, ...]) -> SequenceSpec:
        return cls(kind="explicit", terms=tuple(terms)).check()

    # -- Validation ---------------------------------------------------------

    def check(self) -> SequenceSpec:
        """Raise :class:`InvalidArgumentError` if the parameters do not fit the kind."""
        if self.kind == "modulo-k":
            if self.k is None or self.k < 2:
                raise InvalidArgumentError(f"modulo-k needs k >= 2, got {self.k!r}")
        elif self.kind == "set-sequence":
            if self.base is None or self.base < 1:
                raise InvalidArgumentError(f"set-sequence needs base >= 1, got {self.base!r}")
            if self.set_variant == "paper-figure" and self.base != 3:
                raise InvalidArgumentError(
                    f"paper-figure variant is only defined for base 3, got {self.base}"
                )
        elif self.kind == "explicit":
            if not self.terms:
                raise InvalidArgumentError("explicit sequence needs at least one term")
            negative = [t for t in self.terms if t < 0]
            if negative:
                raise InvalidArgumentError(f"explicit terms must be non-negative: {negative[:3]}")
        return self

    # -- Provenance ---------------------------------------------------------

    @property
    def family(self) -> str:
        """Short family name (s1..s4, linear, custom)."""
        for alias, kind in FAMILY_ALIASES.items():
            if kind == self.kind:
                return alias
        return self.kind

    def label(self) -> str:
        """Compact human label, e.g. ``s3(k=5)``."""
        if self.kind == "modulo-k":
            return f"s3(k={self.k})"
        if self.kind == "set-sequence":
            return f"s4(base={self.base}, {self.set_variant})"
        if self.kind == "explicit":
            shown = ",".join(str(t) for t in (self.terms or ())[:8])
            more = ",..." if self.terms and len(self.terms) > 8 else ""
            return f"custom({shown}{more})"
        return self.family

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"family": self.family, "kind": self.kind}
        if self.kind == "modulo-k":
            data["k"] = self.k
        elif self.kind == "set-sequence":
            data["base"] = self.base
            data["set_variant"] = self.set_variant
        elif self.kind == "explicit":
            data["terms"] = list(self.terms or ())
        return data

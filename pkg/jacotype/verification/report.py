"""ClaimReport and campaign summaries."""

from __future__ import annotations

import json
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from jacotype.verification.tables import TableDiff

ClaimStatus = Literal["verified", "refuted", "partial"]


class ClaimReport(BaseModel):
    """Verdict on one registered claim over a declared instance range."""

    claim_id: str
    title: str = ""
    family: str = ""
    """Families or graphs the claim was evaluated on."""

    parameter_range: str = ""
    status: ClaimStatus
    witness: dict[str, Any] | None = None
    """Counterexample data for refutations; evidence otherwise."""

    parts: dict[str, ClaimStatus] = Field(default_factory=dict)
    """Verdicts on alternative readings (printed vs corrected, restricted vs unrestricted)."""

    notes: list[str] = Field(default_factory=list)
    seed: int | None = None

    @model_validator(mode="after")
    def _refutation_needs_witness(self) -> ClaimReport:
        if self.status == "refuted" and not self.witness:
            raise ValueError(f"{self.claim_id}: a refuted claim must carry a witness")
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "title": self.title,
            "family": self.family,
            "parameter_range": self.parameter_range,
            "status": self.status,
            "witness": self.witness,
            "parts": dict(self.parts),
            "notes": list(self.notes),
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"{self.claim_id}  {self.status.upper()}  {self.title}"]
        if self.family or self.parameter_range:
            lines.append(f"  tested: {self.family} {self.parameter_range}".rstrip())
        for part, verdict in sorted(self.parts.items()):
            lines.append(f"  {part}: {verdict}")
        if self.witness:
            lines.append("  witness: " + json.dumps(self.witness, sort_keys=True))
        lines.extend(f"  note: {n}" for n in self.notes)
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        return "\n".join(lines) + "\n"


class CampaignResult(BaseModel):
    """All reports and table diffs from one run, with the exit-code rule."""

    reports: list[ClaimReport] = Field(default_factory=list)
    tables: list[TableDiff] = Field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {"verified": 0, "refuted": 0, "partial": 0}
        for r in self.reports:
            out[r.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        """1 when a claim is refuted or a table has mismatches, else 0."""
        if any(r.status == "refuted" for r in self.reports):
            return 1
        if any(t.mismatch_count for t in self.tables):
            return 1
        return 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "summary": self.counts(),
            "claims": [r.to_dict() for r in self.reports],
            "tables": [t.to_dict() for t in self.tables],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        parts = [r.to_text() for r in self.reports] + [t.to_text() for t in self.tables]
        if self.reports:
            c = self.counts()
            parts.append(
                f"{len(self.reports)} claims: {c['verified']} verified, "
                f"{c['refuted']} refuted, {c['partial']} partial\n"
            )
        return "".join(parts)

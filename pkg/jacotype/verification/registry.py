"""ClaimRegistry — runs registered claims and collects their reports.

Usage::

    from jacotype.verification import ClaimParams, run_claim

    report = run_claim("P-2.1.4", ClaimParams())
    report.status  # "refuted"
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

from jacotype.errors import BudgetExceededError, InvalidArgumentError
from jacotype.verification.claims import (
    Claim,
    ClaimParams,
    CompleteGraphClaims,
    FamilyClaims,
    StructureClaims,
)
from jacotype.verification.report import CampaignResult, ClaimReport

logger = logging.getLogger(__name__)


class ClaimRegistry:
    """Ordered registry of claims keyed by claim id.

    Loads the built-in claims on init. Additional claims can be registered
    via :meth:`add_claim`.
    """

    def __init__(self) -> None:
        self.claims: dict[str, Claim] = {}
        self._load_default_claims()

    def _load_default_claims(self) -> None:
        for claim in (
            StructureClaims.all_claims()
            + CompleteGraphClaims.all_claims()
            + FamilyClaims.all_claims()
        ):
            self.add_claim(claim)

    def add_claim(self, claim: Claim) -> None:
        if claim.claim_id in self.claims:
            raise InvalidArgumentError(f"claim {claim.claim_id} is already registered")
        self.claims[claim.claim_id] = claim

    def ids(self) -> list[str]:
        return sorted(self.claims)

    def get(self, claim_id: str) -> Claim:
        try:
            return self.claims[claim_id]
        except KeyError:
            raise InvalidArgumentError(
                f"unknown claim {claim_id!r}; known: {', '.join(self.ids())}"
            ) from None

    def run(self, claim_id: str, params: ClaimParams | None = None) -> ClaimReport:
        """Run one claim; oracle failures become a partial report."""
        claim = self.get(claim_id)
        params = params or ClaimParams()
        logger.info("Running claim %s", claim_id)
        try:
            report = claim.run(params)
        except BudgetExceededError as exc:
            report = self._partial(claim, params, f"budget exceeded: {exc}")
        except Exception as exc:
            logger.debug("Claim %s raised", claim_id, exc_info=True)
            report = self._partial(claim, params, f"{type(exc).__name__}: {exc}")
        logger.info("Claim %s: %s", claim_id, report.status)
        return report

    def run_all(self, params: ClaimParams | None = None, workers: int | None = None) -> CampaignResult:
        """Run every claim; reports come back sorted by claim id."""
        params = params or ClaimParams()
        ids = self.ids()
        if workers and workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                reports = list(pool.map(lambda cid: self.run(cid, params), ids))
        else:
            reports = [self.run(cid, params) for cid in ids]
        return CampaignResult(reports=sorted(reports, key=lambda r: r.claim_id))

    @staticmethod
    def _partial(claim: Claim, params: ClaimParams, note: str) -> ClaimReport:
        return ClaimReport(
            claim_id=claim.claim_id,
            title=claim.title,
            status="partial",
            notes=[note],
            seed=params.seed,
        )


_DEFAULT_REGISTRY: ClaimRegistry | None = None


def default_registry() -> ClaimRegistry:
    global _DEFAULT_REGISTRY
    if _DEFAULT_REGISTRY is None:
        _DEFAULT_REGISTRY = ClaimRegistry()
    return _DEFAULT_REGISTRY


def run_claim(claim_id: str, params: ClaimParams | None = None) -> ClaimReport:
    """Evaluate one registered claim with the default registry."""
    return default_registry().run(claim_id, params)


def run_all(params: ClaimParams | None = None, workers: int | None = None) -> CampaignResult:
    return default_registry().run_all(params, workers)

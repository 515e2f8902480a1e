"""Registered claims, grouped by subject."""

from jacotype.verification.claims.base import Claim, ClaimParams, Tally
from jacotype.verification.claims.complete import CompleteGraphClaims
from jacotype.verification.claims.families import FamilyClaims
from jacotype.verification.claims.structure import StructureClaims

__all__ = [
    "Claim",
    "ClaimParams",
    "CompleteGraphClaims",
    "FamilyClaims",
    "StructureClaims",
    "Tally",
]

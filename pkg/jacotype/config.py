"""Global configuration: budgets, limits, seeds, and environment settings."""

from __future__ import annotations

import logging
import os
from typing import Any

from pydantic import BaseModel

logger = logging.getLogger(__name__)

# Largest value a census or binomial count may take (unsigned 64-bit).
U64_MAX = 2**64 - 1

# Largest magnitude for signed matrix entries.
I64_MAX = 2**63 - 1

# Exhaustive-search budgets (graph order).
SUBSET_ORACLE_BUDGET = 14
CENSUS_BUDGET = 64
CIRCUMFERENCE_BUDGET = 20
COVER_BUDGET = 14

# Pascal matrix dimension cap; C(64, 32) still fits a signed 64-bit entry.
MATRIX_DIMENSION_CAP = 64

# total_cliques(n) = 2**n - 1 must fit a signed 64-bit integer.
TOTAL_CLIQUES_CAP = 63

# Seed shared by every randomized check unless overridden.
DEFAULT_SEED = 20160101

# Table 4 modulus; the printed table does not state it.
TABLE4_DEFAULT_K = 5

# Upper bound of the extension-stability scan (Lemma on constant in-degrees).
EXTENSION_SCAN_ORDER = 30

# All environment keys with defaults
_CONFIG_KEYS: dict[str, dict[str, Any]] = {
    "JACO_SEED": {"default": DEFAULT_SEED, "description": "Seed for randomized checks"},
    "JACO_LOG_LEVEL": {"default": "WARNING", "description": "Logging level"},
    "JACO_CENSUS_BUDGET": {"default": CENSUS_BUDGET, "description": "Census order cap"},
    "JACO_CYCLE_BUDGET": {"default": CIRCUMFERENCE_BUDGET, "description": "Longest-cycle order cap"},
    "JACO_COVER_BUDGET": {"default": COVER_BUDGET, "description": "Minimum-cover order cap"},
}

_INT_KEYS = ("JACO_SEED", "JACO_CENSUS_BUDGET", "JACO_CYCLE_BUDGET", "JACO_COVER_BUDGET")


class Settings(BaseModel):
    """Process-wide settings resolved from defaults and the environment."""

    seed: int = DEFAULT_SEED
    log_level: str = "WARNING"
    census_budget: int = CENSUS_BUDGET
    cycle_budget: int = CIRCUMFERENCE_BUDGET
    cover_budget: int = COVER_BUDGET


def load_settings(environ: dict[str, str] | None = None) -> Settings:
    """Load merged settings: defaults -> environment variables.

    Malformed integer values are ignored and the default is kept.
    """
    env = os.environ if environ is None else environ
    values: dict[str, Any] = {key: info["default"] for key, info in _CONFIG_KEYS.items()}

    for key in _CONFIG_KEYS:
        raw = env.get(key)
        if raw is None or not raw.strip():
            continue
        if key in _INT_KEYS:
            try:
                parsed = int(raw.strip())
            except ValueError:
                logger.debug("Ignoring malformed %s=%r", key, raw)
                continue
            if key != "JACO_SEED" and parsed < 1:
                logger.debug("Ignoring non-positive %s=%r", key, raw)
                continue
            values[key] = parsed
        else:
            values[key] = raw.strip().upper()

    return Settings(
        seed=values["JACO_SEED"],
        log_level=values["JACO_LOG_LEVEL"],
        census_budget=values["JACO_CENSUS_BUDGET"],
        cycle_budget=values["JACO_CYCLE_BUDGET"],
        cover_budget=values["JACO_COVER_BUDGET"],
    )

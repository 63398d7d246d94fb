"""Infrastructure configuration utilities."""

from __future__ import annotations

import os
from dataclasses import dataclass

_TRUE_VALUES = frozenset({"1", "true", "yes", "on"})


@dataclass(slots=True)
class Settings:
    """Runtime settings for the toolkit.

    Use `load_settings()` to construct from environment variables. Command-line
    flags override these values for a single invocation.
    """

    log_format: str
    log_level: str
    closure_cap: int
    order_cutoff: int
    spe_cutoff: int
    strict_parsing: bool
    random_seed: int
    sample_size: int


def load_settings() -> Settings:
    """Load settings from environment variables with defaults.

    Environment Variables:
        LOG_FORMAT: ``text`` (default) or ``json`` log lines on stderr.
        LOG_LEVEL: Root log level, ``WARNING`` by default.
        CLOSURE_CAP: Largest subgroup order enumerated before giving up.
        ORDER_CUTOFF: Default power cutoff for order computations.
        SPE_CUTOFF: Power cutoff for the rank-2 infinite-order check.
        STRICT_PARSING: Reject unreduced input words instead of reducing them.
        RANDOM_SEED: Seed for sampled checks.
        SAMPLE_SIZE: Number of random pairs in sampled checks.

    Returns:
        Settings instance with loaded configuration.

    Raises:
        ValueError: If a numeric variable is not an integer.

    """
    log_format = os.getenv("LOG_FORMAT", "text").strip().lower()
    log_level = os.getenv("LOG_LEVEL", "WARNING").strip().upper()
    closure_cap = int(os.getenv("CLOSURE_CAP", "100000").strip())
    order_cutoff = int(os.getenv("ORDER_CUTOFF", "64").strip())
    spe_cutoff = int(os.getenv("SPE_CUTOFF", "1000").strip())
    strict_parsing = os.getenv("STRICT_PARSING", "false").strip().lower() in _TRUE_VALUES
    random_seed = int(os.getenv("RANDOM_SEED", "0").strip())
    sample_size = int(os.getenv("SAMPLE_SIZE", "1000").strip())

    return Settings(
        log_format=log_format,
        log_level=log_level,
        closure_cap=closure_cap,
        order_cutoff=order_cutoff,
        spe_cutoff=spe_cutoff,
        strict_parsing=strict_parsing,
        random_seed=random_seed,
        sample_size=sample_size,
    )

"""Shared fixtures for coxaut tests."""

from __future__ import annotations

import logging
from collections.abc import Iterator

import pytest

from coxaut.domain import CoxAut, Permutation, alpha, sigma
from coxaut.infrastructure.config import Settings


@pytest.fixture(autouse=True)
def _restore_root_logger() -> Iterator[None]:
    """``configure_logging`` replaces root handlers; put pytest's back afterwards."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture()
def settings() -> Settings:
    """Settings with the documented defaults."""
    return Settings(
        log_format="text",
        log_level="WARNING",
        closure_cap=100_000,
        order_cutoff=64,
        spe_cutoff=1000,
        strict_parsing=False,
        random_seed=0,
        sample_size=1000,
    )


@pytest.fixture()
def s12_n3() -> CoxAut:
    """``sigma_12`` in rank 3."""
    return sigma(1, 2, 3)


@pytest.fixture()
def a12_n3() -> CoxAut:
    """``alpha_(1,2)`` in rank 3."""
    return alpha(Permutation.transposition(3, 1, 2))

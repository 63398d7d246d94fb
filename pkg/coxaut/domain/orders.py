"""Outcomes of order computations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Finite:
    """The element has finite order ``order`` (minimal positive exponent)."""

    order: int


@dataclass(frozen=True, slots=True)
class Infinite:
    """The element provably has infinite order."""


@dataclass(frozen=True, slots=True)
class ExceedsCutoff:
    """No power up to ``cutoff`` is the identity; nothing more is claimed."""

    cutoff: int


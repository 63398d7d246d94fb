"""Domain records produced by the verification machinery."""

from __future__ import annotations

from dataclasses import dataclass

from coxaut.domain.automorphisms import CoxAut, FreeEndo
from coxaut.domain.diagram import GeneratorTag
from coxaut.domain.permutations import Permutation


@dataclass(frozen=True, slots=True)
class SubgroupEnumeration:
    """All elements of a finite subgroup, closed under the generators."""

    generators: tuple[CoxAut, ...]
    elements: tuple[CoxAut, ...]

    @property
    def order(self) -> int:
        """Number of elements."""
        return len(self.elements)


@dataclass(frozen=True, slots=True)
class CapExceeded:
    """Closure grew past ``cap`` elements before stabilising."""

    cap: int


# ---------------------------------------------------------------------------
# Helly certificates
# ---------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class FiniteClosure:
    """The subset generates a finite group of the given order."""

    order: int


@dataclass(frozen=True, slots=True)
class DisconnectedParts:
    """The subset splits into pairwise commuting diagram components."""

    parts: tuple[tuple[GeneratorTag, ...], ...]


@dataclass(frozen=True, slots=True)
class ConjugateBlocks:
    """``block_count`` conjugates of the subset by ``alpha_{tau_i}`` pairwise commute."""

    block_count: int
    taus: tuple[Permutation, ...]


Handler = FiniteClosure | DisconnectedParts | ConjugateBlocks

HANDLER_NAMES: dict[type, str] = {
    FiniteClosure: "FiniteClosure",
    DisconnectedParts: "DisconnectedParts",
    ConjugateBlocks: "ConjugateBlocks",
}


@dataclass(frozen=True, slots=True)
class SubsetRecord:
    """One ``(k + 1)``-subset of ``Y`` and the handler that discharges it."""

    k: int
    members: tuple[GeneratorTag, ...]
    handler: Handler


@dataclass(frozen=True, slots=True)
class HellyCertificate:
    """Handlers for every ``(k + 1)``-subset of ``Y``, ``1 <= k <= d``."""

    n: int
    d: int
    records: tuple[SubsetRecord, ...]


@dataclass(frozen=True, slots=True)
class HandlerFailure:
    """Why one handler could not discharge a subset."""

    handler: str
    reason: str


@dataclass(frozen=True, slots=True)
class UnhandledSubset:
    """A subset no handler could discharge, with every handler's reason."""

    k: int
    members: tuple[GeneratorTag, ...]
    failures: tuple[HandlerFailure, ...]


@dataclass(frozen=True, slots=True)
class FailureReport:
    """The induction does not close for ``(n, d)`` with the available handlers."""

    n: int
    d: int
    unhandled: tuple[UnhandledSubset, ...]


# ---------------------------------------------------------------------------
# Embedding search
# ---------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class SurjectivityWitness:
    """A written product of ``Y`` whose ``iota`` image is the named target."""

    name: str
    target: FreeEndo
    word: tuple[GeneratorTag, ...]


@dataclass(frozen=True, slots=True)
class NotFound:
    """The search ball of the given radius misses the listed targets."""

    radius: int
    missing: tuple[str, ...]

"""Pydantic schemas for the certificate document.

A document carries ``n``, ``d`` and one entry per subset; ``evidence`` holds
the handler's data (an order, a list of parts, or block permutations in cycle
notation). An optional ``meta`` block sits beside the checked payload.
"""

from __future__ import annotations

import sys
from typing import Any, Literal

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class FiniteClosureEvidence(BaseModel):
    """Order of the finite subgroup generated by the subset."""

    model_config = ConfigDict(extra="forbid")

    order: int = Field(..., ge=1, description="Exact order of the closure", examples=[8])


class DisconnectedPartsEvidence(BaseModel):
    """Parts of the subset whose elements commute across parts."""

    model_config = ConfigDict(extra="forbid")

    parts: list[list[str]] = Field(
        ...,
        min_length=2,
        description="Generator labels grouped by diagram component",
        examples=[[["sigma(1,2)", "alpha(1,2)"], ["alpha(4,5)"]]],
    )


class ConjugateBlocksEvidence(BaseModel):
    """Block count and the permutations conjugating the subset onto each block."""

    model_config = ConfigDict(extra="forbid")

    blocks: int = Field(..., ge=1, description="Number of commuting conjugates", examples=[2])
    taus: list[str] = Field(
        ..., description="Block permutations in cycle notation", examples=[["id", "(1 3)(2 4)"]]
    )


HandlerName = Literal["FiniteClosure", "DisconnectedParts", "ConjugateBlocks"]

_EVIDENCE_TYPES: dict[str, type[BaseModel]] = {
    "FiniteClosure": FiniteClosureEvidence,
    "DisconnectedParts": DisconnectedPartsEvidence,
    "ConjugateBlocks": ConjugateBlocksEvidence,
}


class SubsetEntry(BaseModel):
    """One ``(k + 1)``-subset of ``Y`` with its handler."""

    model_config = ConfigDict(extra="forbid")

    k: int = Field(..., ge=1, description="Induction level; the subset has k + 1 members")
    members: list[str] = Field(
        ..., min_length=2, description="Generator labels", examples=[["sigma(1,2)", "alpha(2,3)"]]
    )
    handler: HandlerName
    evidence: FiniteClosureEvidence | DisconnectedPartsEvidence | ConjugateBlocksEvidence

    @model_validator(mode="after")
    def _check_evidence(self) -> Self:
        """Reject evidence that does not belong to the named handler."""
        expected = _EVIDENCE_TYPES[self.handler]
        if not isinstance(self.evidence, expected):
            msg = f"handler {self.handler} needs {expected.__name__}"
            raise ValueError(msg)
        return self


class CertificateDocument(BaseModel):
    """The full certificate as stored on disk."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1, description="Rank of W_n", examples=[4])
    d: int = Field(..., ge=1, description="Dimension bound being certified", examples=[1])
    subsets: list[SubsetEntry]
    meta: dict[str, Any] | None = Field(
        None, description="Environment information; not part of the checked payload"
    )

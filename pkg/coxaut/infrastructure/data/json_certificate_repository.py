"""JSON-file repository for Helly certificates."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import pydantic

from coxaut.application import CertificateRepositoryPort
from coxaut.domain import (
    ConjugateBlocks,
    DisconnectedParts,
    FiniteClosure,
    GeneratorTag,
    HellyCertificate,
    SubsetRecord,
    ValidationError,
    parse_cycles,
)
from coxaut.domain.entities import HANDLER_NAMES, Handler
from coxaut.infrastructure.data.schemas import (
    CertificateDocument,
    ConjugateBlocksEvidence,
    DisconnectedPartsEvidence,
    FiniteClosureEvidence,
    SubsetEntry,
)

logger = logging.getLogger(__name__)


def _evidence(
    handler: Handler,
) -> FiniteClosureEvidence | DisconnectedPartsEvidence | ConjugateBlocksEvidence:
    if isinstance(handler, FiniteClosure):
        return FiniteClosureEvidence(order=handler.order)
    if isinstance(handler, DisconnectedParts):
        return DisconnectedPartsEvidence(
            parts=[[tag.label for tag in part] for part in handler.parts]
        )
    return ConjugateBlocksEvidence(
        blocks=handler.block_count, taus=[str(tau) for tau in handler.taus]
    )


def to_document(
    certificate: HellyCertificate, meta: dict[str, Any] | None = None
) -> CertificateDocument:
    """Map a certificate to its storage schema."""
    return CertificateDocument(
        n=certificate.n,
        d=certificate.d,
        subsets=[
            SubsetEntry(
                k=record.k,
                members=[tag.label for tag in record.members],
                handler=HANDLER_NAMES[type(record.handler)],  # type: ignore[arg-type]
                evidence=_evidence(record.handler),
            )
            for record in certificate.records
        ],
        meta=meta,
    )


def from_document(document: CertificateDocument) -> HellyCertificate:
    """Map a validated document back to the domain certificate.

    Raises:
        ValidationError: If a label or permutation does not parse.

    """
    n = document.n
    records: list[SubsetRecord] = []
    for entry in document.subsets:
        members = tuple(GeneratorTag.parse(label) for label in entry.members)
        evidence = entry.evidence
        handler: Handler
        if isinstance(evidence, FiniteClosureEvidence):
            handler = FiniteClosure(evidence.order)
        elif isinstance(evidence, DisconnectedPartsEvidence):
            handler = DisconnectedParts(
                tuple(tuple(GeneratorTag.parse(label) for label in part) for part in evidence.parts)
            )
        else:
            handler = ConjugateBlocks(
                evidence.blocks, tuple(parse_cycles(tau, n) for tau in evidence.taus)
            )
        records.append(SubsetRecord(entry.k, members, handler))
    return HellyCertificate(n, document.d, tuple(records))


class JsonCertificateRepository(CertificateRepositoryPort):
    """Reads and writes certificates as indented JSON documents."""

    def save(
        self, certificate: HellyCertificate, path: Path, *, meta: dict[str, Any] | None = None
    ) -> None:
        """Write the certificate, creating parent directories as needed."""
        path.parent.mkdir(parents=True, exist_ok=True)
        document = to_document(certificate, meta)
        path.write_text(document.model_dump_json(indent=2, exclude_none=True) + "\n")
        logger.debug("wrote %d subsets to %s", len(certificate.records), path)

    def load(self, path: Path) -> HellyCertificate:
        """Read and validate a certificate document; ``meta`` is ignored.

        Raises:
            ValidationError: If the file is missing or does not match the schema.

        """
        if not path.exists():
            raise ValidationError(f"certificate file not found: {path}")
        try:
            document = CertificateDocument.model_validate_json(path.read_text())
        except pydantic.ValidationError as exc:
            raise ValidationError(
                f"malformed certificate {path}: {exc.error_count()} schema errors", cause=exc
            ) from exc
        return from_document(document)

    def dumps(self, certificate: HellyCertificate) -> str:
        """Render the checked payload as indented JSON."""
        return to_document(certificate).model_dump_json(indent=2, exclude_none=True)

"""Application ports (interfaces) for Clean Architecture.

These define the contracts that infrastructure adapters must implement.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Protocol

from coxaut.domain import HellyCertificate


class CertificateRepositoryPort(Protocol):
    """Persists Helly certificates as structured documents."""

    def save(  # pragma: no cover
        self, certificate: HellyCertificate, path: Path, *, meta: dict[str, Any] | None = None
    ) -> None:
        """Write ``certificate`` to ``path``; ``meta`` sits outside the checked payload."""
        ...

    def load(self, path: Path) -> HellyCertificate:  # pragma: no cover
        """Read a certificate back, ignoring any ``meta`` block.

        Raises:
            ValidationError: If the document is malformed.

        """
        ...

    def dumps(self, certificate: HellyCertificate) -> str:  # pragma: no cover
        """Render the checked payload as text."""
        ...

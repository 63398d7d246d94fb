"""Simple dependency container to wire the use cases and adapters."""

from __future__ import annotations

from coxaut.application.use_cases import CertifyHellyUseCase
from coxaut.infrastructure.config import Settings, load_settings
from coxaut.infrastructure.data import JsonCertificateRepository


def build_certify_use_case(settings: Settings | None = None) -> CertifyHellyUseCase:
    """Create a new certificate use case backed by the JSON repository.

    Args:
        settings: Settings to use; loaded from the environment when omitted.

    """
    settings = settings or load_settings()
    return CertifyHellyUseCase(repository=JsonCertificateRepository(), cap=settings.closure_cap)

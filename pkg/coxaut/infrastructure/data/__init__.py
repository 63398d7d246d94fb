"""Certificate repository adapters implementing ``CertificateRepositoryPort``.

Public API
----------
JsonCertificateRepository
"""

from coxaut.infrastructure.data.json_certificate_repository import JsonCertificateRepository

__all__ = [
    "JsonCertificateRepository",
]

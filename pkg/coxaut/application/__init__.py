"""Application layer: verification use cases, DTOs, and port interfaces.

Public API
----------
DTOs:
    CheckResult, VerificationReport

Port interfaces:
    CertificateRepositoryPort

.. note::
   The suites themselves are exported from ``coxaut.application.use_cases``
   (not from this package) to avoid circular imports during loading.
"""

from coxaut.application.dto import CheckResult, VerificationReport
from coxaut.application.ports import CertificateRepositoryPort

__all__ = [
    "CheckResult",
    "VerificationReport",
    "CertificateRepositoryPort",
]

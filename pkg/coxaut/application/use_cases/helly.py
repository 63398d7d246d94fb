"""Inductive fixed-point certificates for the generating set ``Y``.

For every ``k = 1..d`` and every ``(k + 1)``-subset ``Y'`` of ``Y`` one
handler must discharge ``Y'``. Handlers are tried in this order and the first
valid one wins:

``FiniteClosure``
    ``<Y'>`` is finite (enumerated within the cap). A pair of ``Y'`` with an
    infinite diagram label rejects this handler up front once its product is
    certified infinite through ``iota``.
``DisconnectedParts``
    The sub-diagram on ``Y'`` is disconnected, each part has at most ``k``
    elements and elements of different parts commute.
``ConjugateBlocks``
    With ``l = n // (k + 1)`` and ``d < k * l``, the ``l`` conjugates
    ``alpha_tau_i Y' alpha_tau_i^-1`` pairwise commute elementwise and have
    pairwise disjoint supports.

Subsets are processed in lexicographic order of their tags so the
certificate is deterministic.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Any

from coxaut.application.dto import VerificationReport
from coxaut.application.ports import CertificateRepositoryPort
from coxaut.application.use_cases.closure import enumerate_closure
from coxaut.application.use_cases.embedding import iota_matrix_order
from coxaut.domain import (
    INFINITY,
    CapExceeded,
    ConjugateBlocks,
    CoxAut,
    CoxeterDiagram,
    DisconnectedParts,
    FailureReport,
    FiniteClosure,
    GeneratorTag,
    HandlerFailure,
    HandlerRejected,
    HellyCertificate,
    Infinite,
    Permutation,
    SubsetRecord,
    UnhandledSubset,
    ValidationError,
    alpha,
    commutes,
    compose,
    figure1_diagram,
    generating_set,
    support,
)
from coxaut.domain.entities import HANDLER_NAMES, Handler

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Arithmetic helpers
# ---------------------------------------------------------------------------
def tau_permutation(k: int, i: int, n: int) -> Permutation:
    """Swap block ``{1..k+1}`` with block ``{(k+1)(i-1)+1 .. (k+1)i}`` pointwise.

    Raises:
        ValidationError: If ``k < 1`` or ``i`` is outside ``1..n // (k + 1)``.

    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    blocks = n // (k + 1)
    if not 1 <= i <= blocks:
        raise ValidationError(f"block index {i} out of range 1..{blocks}")
    images = list(range(1, n + 1))
    offset = (k + 1) * (i - 1)
    for j in range(1, k + 2):
        images[j - 1], images[offset + j - 1] = offset + j, j
    return Permutation(tuple(images))


def floor_inequality(n: int, k: int) -> bool:
    """Whether ``n // 2 <= k * (n // (k + 1))``.

    Raises:
        ValidationError: If ``k < 1``.

    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    return n // 2 <= k * (n // (k + 1))


def floor_inequality_scan(max_n: int = 64) -> VerificationReport:
    """Check the inequality for all ``4 <= n <= max_n`` and ``1 <= k < n // 2``."""
    if max_n < 4:
        raise ValidationError(f"scan needs max_n >= 4, got {max_n}")
    report = VerificationReport("floor")
    for n in range(4, max_n + 1):
        failing = [k for k in range(1, n // 2) if not floor_inequality(n, k)]
        detail = f"k=1..{n // 2 - 1}" if not failing else f"fails at k={failing}"
        report.add(f"floor.n={n}", not failing, detail)
    return report


@lru_cache(maxsize=4096)
def _tag_aut(tag: GeneratorTag, n: int) -> CoxAut:
    return tag.automorphism(n)


@lru_cache(maxsize=4096)
def _pair_infinite(u: GeneratorTag, v: GeneratorTag, n: int) -> bool:
    return iota_matrix_order(compose(_tag_aut(u, n), _tag_aut(v, n))) == Infinite()


def _conjugate(tau: Permutation, f: CoxAut) -> CoxAut:
    a = alpha(tau)
    return compose(compose(a, f), a.inverse())


def _labels(members: tuple[GeneratorTag, ...]) -> str:
    return "{" + ",".join(tag.label for tag in members) + "}"


# ---------------------------------------------------------------------------
# Handlers: each returns a validated record or raises HandlerRejected
# ---------------------------------------------------------------------------
def _finite_closure(
    members: tuple[GeneratorTag, ...], n: int, cap: int, diagram: CoxeterDiagram
) -> FiniteClosure:
    for u, v in combinations(members, 2):
        if diagram.label(u, v) == INFINITY and _pair_infinite(u, v, n):
            raise HandlerRejected(f"{u.label}*{v.label} has infinite order (matrix certificate)")
    result = enumerate_closure([_tag_aut(tag, n) for tag in members], cap)
    if isinstance(result, CapExceeded):
        raise HandlerRejected(f"closure exceeds cap {cap}")
    return FiniteClosure(result.order)


def _validate_finite_closure(
    members: tuple[GeneratorTag, ...], n: int, claimed: FiniteClosure
) -> None:
    if claimed.order < 1:
        raise HandlerRejected(f"claimed order {claimed.order} is not positive")
    result = enumerate_closure([_tag_aut(tag, n) for tag in members], claimed.order)
    if isinstance(result, CapExceeded):
        raise HandlerRejected(f"closure is larger than the claimed order {claimed.order}")
    if result.order != claimed.order:
        raise HandlerRejected(f"closure has order {result.order}, claimed {claimed.order}")


def _validate_parts(
    members: tuple[GeneratorTag, ...],
    k: int,
    n: int,
    parts: tuple[tuple[GeneratorTag, ...], ...],
) -> None:
    flat = [tag for part in parts for tag in part]
    if sorted(flat) != sorted(members) or len(set(flat)) != len(flat):
        raise HandlerRejected("parts do not partition the subset")
    if len(parts) < 2:
        raise HandlerRejected("sub-diagram is connected")
    too_big = [part for part in parts if len(part) > k]
    if too_big:
        raise HandlerRejected(f"part {_labels(too_big[0])} has more than {k} elements")
    for left, right in combinations(parts, 2):
        for u in left:
            for v in right:
                if not commutes(_tag_aut(u, n), _tag_aut(v, n)):
                    raise HandlerRejected(f"{u.label} and {v.label} do not commute")


def _disconnected_parts(
    members: tuple[GeneratorTag, ...], k: int, n: int, diagram: CoxeterDiagram
) -> DisconnectedParts:
    parts = tuple(diagram.components(members))
    _validate_parts(members, k, n, parts)
    return DisconnectedParts(parts)


def _validate_blocks(
    members: tuple[GeneratorTag, ...],
    k: int,
    n: int,
    d: int,
    block_count: int,
    taus: tuple[Permutation, ...],
) -> None:
    if len(taus) != block_count:
        raise HandlerRejected(f"{len(taus)} permutations for {block_count} blocks")
    if block_count > n // (k + 1):
        raise HandlerRejected(f"at most {n // (k + 1)} blocks fit, got {block_count}")
    if not d < k * block_count:
        raise HandlerRejected(f"d < k*l fails: {d} < {k}*{block_count}")
    for tau in taus:
        if tau.degree != n:
            raise HandlerRejected(f"permutation of degree {tau.degree}, expected {n}")
    conjugates = [[_conjugate(tau, _tag_aut(tag, n)) for tag in members] for tau in taus]
    supports = [frozenset().union(*(support(f) for f in block)) for block in conjugates]
    for (i, left), (j, right) in combinations(enumerate(conjugates, start=1), 2):
        if supports[i - 1] & supports[j - 1]:
            raise HandlerRejected(f"blocks {i} and {j} have overlapping supports")
        for f in left:
            for g in right:
                if not commutes(f, g):
                    raise HandlerRejected(f"blocks {i} and {j} do not commute")


def _conjugate_blocks(members: tuple[GeneratorTag, ...], k: int, n: int, d: int) -> ConjugateBlocks:
    block_count = n // (k + 1)
    if not d < k * block_count:
        raise HandlerRejected(f"d < k*l fails: {d} < {k}*{block_count}")
    taus = tuple(tau_permutation(k, i, n) for i in range(1, block_count + 1))
    _validate_blocks(members, k, n, d, block_count, taus)
    return ConjugateBlocks(block_count, taus)


# ---------------------------------------------------------------------------
# Generation and checking
# ---------------------------------------------------------------------------
def _discharge(
    members: tuple[GeneratorTag, ...],
    k: int,
    n: int,
    d: int,
    cap: int,
    diagram: CoxeterDiagram,
) -> Handler | UnhandledSubset:
    failures: list[HandlerFailure] = []
    try:
        return _finite_closure(members, n, cap, diagram)
    except HandlerRejected as exc:
        failures.append(HandlerFailure("FiniteClosure", str(exc)))
    try:
        return _disconnected_parts(members, k, n, diagram)
    except HandlerRejected as exc:
        failures.append(HandlerFailure("DisconnectedParts", str(exc)))
    try:
        return _conjugate_blocks(members, k, n, d)
    except HandlerRejected as exc:
        failures.append(HandlerFailure("ConjugateBlocks", str(exc)))
    return UnhandledSubset(k, members, tuple(failures))


def helly_certificate(n: int, d: int, cap: int = 100_000) -> HellyCertificate | FailureReport:
    """Assign and validate a handler for every ``(k + 1)``-subset of ``Y``, ``1 <= k <= d``.

    Args:
        n: Rank, at least 4.
        d: Target dimension, at least 1.
        cap: Closure cap for ``FiniteClosure``.

    Returns:
        The certificate, or a report naming every subset no handler
        discharges together with each handler's reason.

    Raises:
        ValidationError: If ``n < 4``, ``d < 1`` or ``cap < 1``.

    """
    if n < 4:
        raise ValidationError(f"certificates need n >= 4, got {n}")
    if d < 1:
        raise ValidationError(f"d must be >= 1, got {d}")
    if cap < 1:
        raise ValidationError(f"cap must be >= 1, got {cap}")
    diagram = figure1_diagram(n)
    tags = generating_set(n)
    records: list[SubsetRecord] = []
    unhandled: list[UnhandledSubset] = []
    for k in range(1, d + 1):
        for members in combinations(tags, k + 1):
            outcome = _discharge(members, k, n, d, cap, diagram)
            if isinstance(outcome, UnhandledSubset):
                logger.debug("k=%d %s unhandled", k, _labels(members))
                unhandled.append(outcome)
            else:
                logger.debug("k=%d %s -> %s", k, _labels(members), HANDLER_NAMES[type(outcome)])
                records.append(SubsetRecord(k, members, outcome))
    if unhandled:
        logger.info("helly n=%d d=%d: %d unhandled subsets", n, d, len(unhandled))
        return FailureReport(n, d, tuple(unhandled))
    logger.info("helly n=%d d=%d: %d subsets certified", n, d, len(records))
    return HellyCertificate(n, d, tuple(records))


def check_helly_certificate(certificate: HellyCertificate) -> VerificationReport:
    """Re-validate every record from scratch, plus the bound and completeness.

    Nothing from the generator is trusted: closures are re-enumerated up to
    the claimed order, parts and blocks are re-checked for commutation.
    """
    n, d = certificate.n, certificate.d
    report = VerificationReport("helly")
    bound_ok = n >= 4 and 1 <= d < n // 2
    report.add(f"helly.n={n}.d={d}.bound", bound_ok, f"d < floor(n/2) = {n // 2}")
    if n < 4 or d < 1:
        return report

    tags = generating_set(n)
    expected = {members for k in range(1, d + 1) for members in combinations(tags, k + 1)}
    listed = [record.members for record in certificate.records]
    missing = expected - set(listed)
    extra = [members for members in listed if members not in expected]
    duplicates = len(listed) - len(set(listed))
    report.add(
        f"helly.n={n}.d={d}.complete",
        not missing and not extra and duplicates == 0,
        f"{len(expected)} subsets expected, {len(missing)} missing, "
        f"{len(extra)} unexpected, {duplicates} duplicated",
    )

    for record in certificate.records:
        check_id = f"helly.k={record.k}.{_labels(record.members)}"
        name = HANDLER_NAMES[type(record.handler)]
        try:
            _validate_record(record, n, d)
        except HandlerRejected as exc:
            report.add(check_id, False, f"{name}: {exc}")
        else:
            report.add(check_id, True, name)
    return report


def _validate_record(record: SubsetRecord, n: int, d: int) -> None:
    members, k, handler = record.members, record.k, record.handler
    if len(members) != k + 1:
        raise HandlerRejected(f"{len(members)} members recorded for k={k}")
    if isinstance(handler, FiniteClosure):
        _validate_finite_closure(members, n, handler)
    elif isinstance(handler, DisconnectedParts):
        _validate_parts(members, k, n, handler.parts)
    else:
        _validate_blocks(members, k, n, d, handler.block_count, handler.taus)


class CertifyHellyUseCase:
    """Use case: generate, persist and re-check Helly certificates."""

    def __init__(self, *, repository: CertificateRepositoryPort, cap: int) -> None:
        """Create the use case with its dependencies.

        Args:
            repository: Adapter that reads and writes certificate documents.
            cap: Default closure cap for ``FiniteClosure``.

        """
        self._repository = repository
        self._cap = cap

    def execute(
        self,
        n: int,
        d: int,
        *,
        cap: int | None = None,
        out: Path | None = None,
        meta: dict[str, Any] | None = None,
    ) -> HellyCertificate | FailureReport:
        """Generate a certificate and write it to ``out`` when one is produced."""
        result = helly_certificate(n, d, self._cap if cap is None else cap)
        if isinstance(result, HellyCertificate) and out is not None:
            self._repository.save(result, out, meta=meta)
            logger.info("certificate written to %s", out)
        return result

    def check(self, path: Path) -> VerificationReport:
        """Load a certificate document and re-validate it.

        Raises:
            ValidationError: If the document is malformed.

        """
        return check_helly_certificate(self._repository.load(path))

    def render(self, certificate: HellyCertificate) -> str:
        """Return the certificate document as text."""
        return self._repository.dumps(certificate)

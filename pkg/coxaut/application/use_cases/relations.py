"""Relation suites: the conjugation relation and the Coxeter diagram of ``Y``."""

from __future__ import annotations

import logging
from math import factorial

from coxaut.application.dto import VerificationReport
from coxaut.application.use_cases.closure import enumerate_closure
from coxaut.application.use_cases.embedding import iota_matrix_order
from coxaut.domain import (
    INFINITY,
    CapExceeded,
    ExceedsCutoff,
    Finite,
    GeneratorTag,
    Infinite,
    ValidationError,
    all_permutations,
    alpha,
    aut_equal,
    compose,
    figure1_diagram,
    order_with_cutoff,
    sigma,
)

logger = logging.getLogger(__name__)

B_TYPE_MAX_RANK = 6


def verify_conjugation_relations(n: int) -> VerificationReport:
    """Check ``alpha_pi sigma_ij alpha_pi^-1 == sigma_{pi(i) pi(j)}`` for all ``pi``, ``i != j``.

    One line is emitted per ordered pair ``(i, j)``, covering all of ``Sym(n)``.

    Raises:
        ValidationError: If ``n < 2``.

    """
    if n < 2:
        raise ValidationError(f"conjugation relations need n >= 2, got {n}")
    report = VerificationReport("relations")
    perms = [(p, alpha(p)) for p in all_permutations(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            s = sigma(i, j, n)
            bad = [
                p
                for p, a in perms
                if not aut_equal(compose(compose(a, s), a.inverse()), sigma(p(i), p(j), n))
            ]
            detail = f"{len(perms) - len(bad)}/{len(perms)} permutations"
            if bad:
                detail += f", first failure pi={bad[0].images}"
            report.add(f"relations.n={n}.sigma({i},{j})", not bad, detail)
    logger.info("conjugation relations n=%d: %d checks", n, len(report.checks))
    return report


def _label_text(label: float) -> str:
    return "inf" if label == INFINITY else str(int(label))


def verify_diagram_relations(n: int, cutoff: int, *, cap: int = 100_000) -> VerificationReport:
    """Reproduce every label of the diagram on ``Y`` from the automorphisms themselves.

    Finite labels must equal the exact order of the product. The infinite
    label needs the product to outlast ``cutoff`` and its matrix through
    ``iota`` to have infinite order. For ``n <= 6`` the subgroup
    ``<sigma_12, alpha_(2,3), ..., alpha_(n-1,n)>`` is also enumerated and its
    order checked against ``|B_{n-1}|``.

    Args:
        n: Rank, at least 3.
        cutoff: Power cutoff, at least 8.
        cap: Closure cap for the subgroup enumeration.

    Returns:
        A report with one line per vertex, per pair and for the subgroup.

    Raises:
        ValidationError: If ``n < 3`` or ``cutoff < 8``.

    """
    if cutoff < 8:
        raise ValidationError(f"cutoff must be >= 8, got {cutoff}")
    diagram = figure1_diagram(n)
    report = VerificationReport("figure1")
    auts = {tag: tag.automorphism(n) for tag in diagram.vertices}

    for tag, aut in auts.items():
        order = order_with_cutoff(aut, cutoff)
        report.add(f"figure1.n={n}.involution.{tag.label}", order == Finite(2), _describe(order))

    for u, v, label in diagram.pairs():
        check_id = f"figure1.n={n}.edge.{u.label}-{v.label}"
        product = compose(auts[u], auts[v])
        order = order_with_cutoff(product, cutoff)
        if label == INFINITY:
            matrix = iota_matrix_order(product)
            passed = isinstance(order, ExceedsCutoff) and matrix == Infinite()
            detail = f"label inf, {_describe(order)}, matrix {_describe(matrix)}"
        else:
            passed = order == Finite(int(label))
            detail = f"label {_label_text(label)}, {_describe(order)}"
        report.add(check_id, passed, detail)

    if n <= B_TYPE_MAX_RANK:
        report.extend(_b_type_check(n, cap))
    logger.info("diagram relations n=%d: %d checks", n, len(report.checks))
    return report


def _b_type_check(n: int, cap: int) -> VerificationReport:
    report = VerificationReport("figure1")
    tags = [GeneratorTag.sigma12(), *(GeneratorTag.alpha_adj(i) for i in range(2, n))]
    bound = 2 ** (n - 1) * factorial(n - 1)
    result = enumerate_closure([tag.automorphism(n) for tag in tags], cap)
    check_id = f"figure1.n={n}.b-type"
    if isinstance(result, CapExceeded):
        report.add(check_id, False, f"closure exceeds cap {cap}")
    else:
        divides = bound % result.order == 0
        verb = "divides" if divides else "does not divide"
        report.add(check_id, divides, f"order {result.order} {verb} {bound}")
    return report


def _describe(order: Finite | Infinite | ExceedsCutoff) -> str:
    if isinstance(order, Finite):
        return f"order {order.order}"
    if isinstance(order, Infinite):
        return "infinite"
    return f"order > {order.cutoff}"

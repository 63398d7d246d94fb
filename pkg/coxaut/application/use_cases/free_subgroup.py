"""A free subgroup of rank 2 inside ``iota(Aut(W_n))``."""

from __future__ import annotations

import logging

from coxaut.application.dto import VerificationReport
from coxaut.domain import (
    CoxAut,
    FreeEndo,
    FreeWord,
    ValidationError,
    free_compose,
    free_equal,
    free_identity_endo,
    inner,
    iota,
    product,
    sigma,
)

logger = logging.getLogger(__name__)


def partial_conjugation_word(first: int, second: int, n: int) -> CoxAut:
    """The written product ``sigma_{a,*} sigma_{b,*}`` for ``a = first``, ``b = second``.

    Each block runs over every other index in increasing order, so
    ``partial_conjugation_word(1, 2, 3)`` is ``sigma_12 sigma_13 sigma_21 sigma_23``.
    """
    factors = [sigma(first, j, n) for j in range(1, n + 1) if j != first]
    factors += [sigma(second, j, n) for j in range(1, n + 1) if j != second]
    return product(factors, n)


def free_ball(generators: list[FreeEndo], radius: int) -> tuple[int, int, int]:
    """Count reduced words of length ``<= radius`` in ``generators`` and their inverses.

    ``generators`` lists the positive letters followed by their inverses in
    the same order, so letter ``i`` cancels letter ``(i + half) % len``.

    Returns:
        ``(total, distinct, exact)``: the number of reduced words (identity
        included), the number of distinct values among them, and the number of
        words of length exactly ``radius``.

    """
    half = len(generators) // 2
    rank = generators[0].rank
    values: set[FreeEndo] = {free_identity_endo(rank)}
    total = 1
    layer: list[tuple[int, FreeEndo]] = [(-1, free_identity_endo(rank))]
    for _ in range(radius):
        nxt: list[tuple[int, FreeEndo]] = []
        for last, value in layer:
            for index, g in enumerate(generators):
                if last >= 0 and index == (last + half) % len(generators):
                    continue
                nxt.append((index, free_compose(value, g)))
        layer = nxt
        total += len(layer)
        values.update(value for _, value in layer)
    return total, len(values), len(layer)


def prop34_check(n: int, ball: int) -> VerificationReport:
    """Check that ``iota`` sends two partial-conjugation products to ``g_x1`` and ``g_x2``.

    Then checks that the reduced words of length ``<= ball`` in
    ``g_x1^{+-1}, g_x2^{+-1}`` are pairwise distinct automorphisms.

    Raises:
        ValidationError: If ``n < 3`` or ``ball < 1``.

    """
    if n < 3:
        raise ValidationError(f"the free subgroup needs n >= 3, got {n}")
    if ball < 1:
        raise ValidationError(f"ball radius must be >= 1, got {ball}")
    report = VerificationReport("prop34")
    m = n - 1
    g1 = inner(FreeWord(m, ((1, 1),)))
    g2 = inner(FreeWord(m, ((2, 1),)))
    image1 = iota(partial_conjugation_word(1, 2, n))
    image2 = iota(partial_conjugation_word(2, 3, n))
    report.add(f"prop34.n={n}.word1", free_equal(image1, g1), "iota(sigma_1* sigma_2*) = g_x1")
    report.add(f"prop34.n={n}.word2", free_equal(image2, g2), "iota(sigma_2* sigma_3*) = g_x2")

    inverses = [inner(FreeWord(m, ((1, -1),))), inner(FreeWord(m, ((2, -1),)))]
    total, distinct, exact = free_ball([g1, g2, *inverses], ball)
    report.add(
        f"prop34.n={n}.ball={ball}",
        total == distinct,
        f"{distinct}/{total} distinct, {exact} of length {ball}",
    )
    logger.info("free subgroup n=%d ball=%d: %d words", n, ball, total)
    return report

"""Special automorphisms and the passage to ``W_2``.

``Aut(W_n)`` permutes the ``n`` conjugacy classes of involutions; the
kernel of that action is ``Spe(W_n)``. In rank 2 it is generated by
``sigma_12`` and ``sigma_21``, which behave like the generators of an
infinite dihedral group. Automorphisms preserving the kernel of
``W_n -> W_2`` descend to ``W_2``.
"""

from __future__ import annotations

import logging
import random

from coxaut.application.dto import VerificationReport
from coxaut.domain import (
    CoxAut,
    CoxWord,
    ExceedsCutoff,
    Finite,
    Permutation,
    ValidationError,
    alpha,
    apply,
    aut_equal,
    compose,
    induced_on_W2,
    is_special,
    order_with_cutoff,
    product,
    project_to_W2,
    sigma,
    spe_quotient_perm,
)

logger = logging.getLogger(__name__)

SAMPLE_RANKS = (4, 5)
MAX_FACTORS = 4
SAMPLE_WORD_LENGTH = 6


def _generators(n: int) -> list[CoxAut]:
    partials = [sigma(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    transpositions = [
        alpha(Permutation.transposition(n, i, j))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    return partials + transpositions


def _random_element(rng: random.Random, gens: list[CoxAut], n: int) -> CoxAut:
    return product((rng.choice(gens) for _ in range(rng.randint(0, MAX_FACTORS))), n)


def _random_word(rng: random.Random, n: int) -> CoxWord:
    letters: list[int] = []
    for _ in range(SAMPLE_WORD_LENGTH):
        choices = [k for k in range(1, n + 1) if not letters or k != letters[-1]]
        letters.append(rng.choice(choices))
    return CoxWord(n, tuple(letters))


def spe_w2_check(cutoff: int, *, sample_size: int = 1000, seed: int = 0) -> VerificationReport:
    """Verify the rank-2 special automorphisms and the descent to ``W_2``.

    Args:
        cutoff: Power cutoff for the infinite-order check, at least 8.
        sample_size: Random pairs drawn per rank for the sampled checks.
        seed: Seed of the sampling generator.

    Returns:
        A report covering involutions, specialness, the infinite product,
        descent witnesses and commuting squares for every ``sigma_ij`` at
        ``n = 4, 5``, and sampled multiplicativity of the class permutation.

    Raises:
        ValidationError: If ``cutoff < 8`` or ``sample_size < 0``.

    """
    if cutoff < 8:
        raise ValidationError(f"cutoff must be >= 8, got {cutoff}")
    if sample_size < 0:
        raise ValidationError(f"sample size must be >= 0, got {sample_size}")
    report = VerificationReport("spe")
    s12, s21 = sigma(1, 2, 2), sigma(2, 1, 2)
    for name, f in (("sigma(1,2)", s12), ("sigma(2,1)", s21)):
        order = order_with_cutoff(f, cutoff)
        report.add(f"spe.w2.involution.{name}", order == Finite(2), f"order {_text(order)}")
        report.add(f"spe.w2.special.{name}", is_special(f), "fixes both involution classes")
    order = order_with_cutoff(compose(s12, s21), cutoff)
    report.add(
        "spe.w2.infinite-dihedral",
        isinstance(order, ExceedsCutoff),
        f"sigma(1,2)*sigma(2,1) order {_text(order)}",
    )

    rng = random.Random(seed)
    for n in SAMPLE_RANKS:
        report.add(
            f"spe.n={n}.descent-witnesses",
            aut_equal(induced_on_W2(sigma(1, 2, n)), s12)
            and aut_equal(induced_on_W2(sigma(2, 1, n)), s21),
            "sigma(1,2) and sigma(2,1) descend to themselves",
        )
        report.extend(_commuting_squares(n, rng))
        report.extend(_sampled_quotient(n, rng, sample_size))
    logger.info("spe suite: %d checks", len(report.checks))
    return report


def _commuting_squares(n: int, rng: random.Random) -> VerificationReport:
    """``project(f(w)) == induced(f)(project(w))`` for every ``sigma_ij`` on sample words."""
    report = VerificationReport("spe")
    samples = [CoxWord(n, (k,)) for k in range(1, n + 1)]
    samples += [_random_word(rng, n) for _ in range(8)]
    failures: list[str] = []
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for i, j in pairs:
        f = sigma(i, j, n)
        down = induced_on_W2(f)
        for w in samples:
            if project_to_W2(apply(f, w)) != apply(down, project_to_W2(w)):
                failures.append(f"sigma({i},{j})")
                break
    report.add(
        f"spe.n={n}.commuting-squares",
        not failures,
        f"{len(pairs) - len(failures)}/{len(pairs)} partial conjugations",
    )
    return report


def _sampled_quotient(n: int, rng: random.Random, sample_size: int) -> VerificationReport:
    """Multiplicativity of the class permutation and its kernel on random products."""
    report = VerificationReport("spe")
    gens = _generators(n)
    broken = 0
    kernel_mismatch = 0
    for _ in range(sample_size):
        f = _random_element(rng, gens, n)
        g = _random_element(rng, gens, n)
        fg = compose(f, g)
        if spe_quotient_perm(fg) != spe_quotient_perm(f) * spe_quotient_perm(g):
            broken += 1
        if is_special(fg) != spe_quotient_perm(fg).is_identity:
            kernel_mismatch += 1
    report.add(
        f"spe.n={n}.multiplicative",
        broken == 0,
        f"{sample_size - broken}/{sample_size} random pairs",
    )
    report.add(
        f"spe.n={n}.kernel",
        kernel_mismatch == 0,
        f"{sample_size - kernel_mismatch}/{sample_size} special iff trivial permutation",
    )
    return report


def _text(order: Finite | ExceedsCutoff) -> str:
    return str(order.order) if isinstance(order, Finite) else f"> {order.cutoff}"

"""Finite quotients of ``Aut(W_n)`` through ``Sym(n)``.

Any homomorphism to a finite group factors through the action on involution
classes, so its kernel meets ``Sym(n)`` in a normal subgroup. The checks here
cover the algebraic facts the case analysis rests on: the normal subgroups
of ``Sym(n)`` for small ``n``, the commuting involutions ``alpha_(1,2)`` and
``sigma_34``, and explicit generation witnesses.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import factorial

from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from coxaut.application.dto import VerificationReport
from coxaut.application.use_cases.closure import enumerate_closure
from coxaut.domain import (
    CapExceeded,
    Finite,
    Permutation,
    ValidationError,
    all_permutations,
    alpha,
    aut_equal,
    commutes,
    compose,
    order_with_cutoff,
    sigma,
)

logger = logging.getLogger(__name__)

MAX_SYMMETRIC_DEGREE = 6


def normal_subgroups_sym(n: int) -> list[frozenset[Permutation]]:
    """Every normal subgroup of ``Sym(n)``, smallest first.

    Normal subgroups are unions of conjugacy classes containing the identity.
    A union is kept when its size divides ``n!`` and the group it generates
    is no larger than the union itself.

    Raises:
        ValidationError: If ``n`` is outside ``2..6``.

    """
    if not 2 <= n <= MAX_SYMMETRIC_DEGREE:
        raise ValidationError(f"normal subgroups are enumerated for 2 <= n <= 6, got {n}")
    group = SymmetricGroup(n)
    classes = [frozenset(cls) for cls in group.conjugacy_classes()]
    trivial = next(cls for cls in classes if any(p.is_Identity for p in cls))
    others = [cls for cls in classes if cls is not trivial]
    order = factorial(n)

    found: list[frozenset[Permutation]] = []
    for r in range(len(others) + 1):
        for chosen in combinations(others, r):
            size = len(trivial) + sum(len(cls) for cls in chosen)
            if order % size:
                continue
            members = trivial.union(*chosen)
            if PermutationGroup(list(members)).order() != size:
                continue
            found.append(frozenset(Permutation.from_sympy(p, n) for p in members))
    found.sort(key=len)
    logger.debug("Sym(%d) has %d normal subgroups", n, len(found))
    return found


def _even_carrier(n: int, k: int, j: int) -> Permutation:
    """An even permutation with ``3 -> k`` and ``4 -> j``."""
    images = [0] * n
    images[2], images[3] = k, j
    rest = [x for x in range(1, n + 1) if x not in (k, j)]
    positions = [p for p in range(1, n + 1) if p not in (3, 4)]
    for position, value in zip(positions, rest, strict=True):
        images[position - 1] = value
    perm = Permutation(tuple(images))
    if not perm.is_even:
        perm = perm * Permutation.transposition(n, positions[0], positions[1])
    return perm


def _klein_group() -> frozenset[Permutation]:
    return frozenset(
        Permutation.from_cycles(4, cycles)
        for cycles in ((), ((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3)))
    )


def theorem_d_check(n: int, *, cap: int = 100_000) -> VerificationReport:
    """Verify the algebraic inputs of the finite-quotient case analysis.

    Checks that ``alpha_(1,2)`` and ``sigma_34`` are commuting involutions;
    that every ``sigma_kj`` is ``alpha_pi sigma_34 alpha_pi^-1`` for an even
    ``pi``; that every ``alpha_(i,i+1)`` is ``alpha_(1,2)`` times an even
    ``alpha``; for ``n = 4`` that ``<sigma_12, alpha_(2,3), alpha_(3,4)>`` is
    finite of order dividing 48; and for ``n <= 6`` that every nontrivial
    normal subgroup of ``Sym(n)`` contains ``Alt(n)`` or is the Klein group.

    Raises:
        ValidationError: If ``n < 4``.

    """
    if n < 4:
        raise ValidationError(f"theorem D checks need n >= 4, got {n}")
    report = VerificationReport("theorem-d")
    a12 = alpha(Permutation.transposition(n, 1, 2))
    s34 = sigma(3, 4, n)
    report.add(
        f"theorem-d.n={n}.involutions",
        order_with_cutoff(a12, 4) == Finite(2) and order_with_cutoff(s34, 4) == Finite(2),
        "alpha(1,2) and sigma(3,4) have order 2",
    )
    report.add(f"theorem-d.n={n}.commute", commutes(a12, s34), "alpha(1,2) sigma(3,4)")

    failures: list[str] = []
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            if k == j:
                continue
            pi = _even_carrier(n, k, j)
            a = alpha(pi)
            conj = compose(compose(a, s34), a.inverse())
            if not (pi.is_even and aut_equal(conj, sigma(k, j, n))):
                failures.append(f"sigma({k},{j})")
    report.add(
        f"theorem-d.n={n}.sigma-witnesses",
        not failures,
        f"{n * (n - 1) - len(failures)}/{n * (n - 1)} conjugates by even permutations",
    )

    failures = []
    for i in range(1, n):
        rho = Permutation.transposition(n, 1, 2) * Permutation.transposition(n, i, i + 1)
        target = alpha(Permutation.transposition(n, i, i + 1))
        if not (rho.is_even and aut_equal(compose(a12, alpha(rho)), target)):
            failures.append(f"alpha({i},{i + 1})")
    report.add(
        f"theorem-d.n={n}.alpha-witnesses",
        not failures,
        f"{n - 1 - len(failures)}/{n - 1} as alpha(1,2) times an even permutation",
    )

    if n == 4:
        gens = [sigma(1, 2, 4), alpha(Permutation.transposition(4, 2, 3))]
        gens.append(alpha(Permutation.transposition(4, 3, 4)))
        result = enumerate_closure(gens, cap)
        if isinstance(result, CapExceeded):
            report.add("theorem-d.n=4.finite-image", False, f"closure exceeds cap {cap}")
        else:
            report.add(
                "theorem-d.n=4.finite-image",
                48 % result.order == 0,
                f"order {result.order}, bound 48",
            )

    if n <= MAX_SYMMETRIC_DEGREE:
        report.extend(_normal_dichotomy(n))
    logger.info("theorem D n=%d: %d checks", n, len(report.checks))
    return report


def _normal_dichotomy(n: int) -> VerificationReport:
    report = VerificationReport("theorem-d")
    subgroups = normal_subgroups_sym(n)
    alternating = frozenset(p for p in all_permutations(n) if p.is_even)
    klein = _klein_group() if n == 4 else None
    bad = [sub for sub in subgroups if len(sub) > 1 and not alternating <= sub and sub != klein]
    detail = f"{len(subgroups)} normal subgroups"
    if bad:
        detail += f", {len(bad)} neither trivial, Klein nor containing Alt({n})"
    report.add(f"theorem-d.n={n}.normal-subgroups", not bad, detail)
    return report

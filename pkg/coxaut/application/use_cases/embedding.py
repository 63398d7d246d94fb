"""Checks on the embedding ``iota: Aut(W_n) -> Aut(F_{n-1})``.

Includes the search for preimages of the standard Nielsen generators of
``Aut(F_2)`` among short products of ``Y`` at ``n = 3``, and a desk check that
``iota`` separates the elements of a ball in ``Y``.
"""

from __future__ import annotations

import logging
from collections import deque

from coxaut.application.dto import VerificationReport
from coxaut.domain import (
    CoxAut,
    CoxEndo,
    Finite,
    FreeEndo,
    FreeWord,
    GeneratorTag,
    Infinite,
    NotFound,
    SurjectivityWitness,
    ValidationError,
    abelianization_matrix,
    compose,
    finite_order_exact,
    generating_set,
    identity_aut,
    iota,
)

logger = logging.getLogger(__name__)


def iota_matrix_order(f: CoxAut) -> Finite | Infinite:
    """Exact order of the abelianized image ``iota(f)`` in ``GL_{n-1}(Z)``.

    An ``Infinite`` answer certifies that ``f`` itself has infinite order.
    """
    return finite_order_exact(abelianization_matrix(iota(f)))


def _ball(n: int, radius: int) -> list[tuple[tuple[GeneratorTag, ...], CoxAut]]:
    """Distinct automorphisms given by written products of at most ``radius`` letters of ``Y``.

    Each element is paired with a shortest word; words are extended on the right.
    """
    tags = generating_set(n)
    auts = [(tag, tag.automorphism(n)) for tag in tags]
    start = identity_aut(n)
    seen: dict[CoxEndo, tuple[tuple[GeneratorTag, ...], CoxAut]] = {start.forward: ((), start)}
    frontier: deque[tuple[tuple[GeneratorTag, ...], CoxAut]] = deque([((), start)])
    while frontier:
        word, element = frontier.popleft()
        if len(word) == radius:
            continue
        for tag, g in auts:
            nxt = compose(element, g)
            if nxt.forward in seen:
                continue
            entry = ((*word, tag), nxt)
            seen[nxt.forward] = entry
            frontier.append(entry)
    return list(seen.values())


def nielsen_targets() -> dict[str, FreeEndo]:
    """The identity and the standard Nielsen generators of ``Aut(F_2)``."""
    x1 = FreeWord(2, ((1, 1),))
    x2 = FreeWord(2, ((2, 1),))
    return {
        "identity": FreeEndo(2, (x1, x2)),
        "swap": FreeEndo(2, (x2, x1)),
        "invert": FreeEndo(2, (FreeWord(2, ((1, -1),)), x2)),
        "nielsen": FreeEndo(2, (FreeWord(2, ((1, 1), (2, 1))), x2)),
    }


def lemma23_surjectivity_search(
    ball: int,
) -> tuple[SurjectivityWitness, ...] | NotFound:
    """Find ``Y``-words at ``n = 3`` whose ``iota`` images are the Nielsen generators.

    Args:
        ball: Maximal word length searched.

    Returns:
        One shortest witness per target, or ``NotFound`` naming the targets
        that the ball does not reach.

    Raises:
        ValidationError: If ``ball < 1``.

    """
    if ball < 1:
        raise ValidationError(f"search radius must be >= 1, got {ball}")
    targets = nielsen_targets()
    found: dict[str, SurjectivityWitness] = {}
    for word, element in _ball(3, ball):
        image = iota(element)
        for name, target in targets.items():
            if name not in found and image == target:
                found[name] = SurjectivityWitness(name, target, word)
        if len(found) == len(targets):
            break
    missing = tuple(name for name in targets if name not in found)
    if missing:
        logger.info("surjectivity search radius %d misses %s", ball, ", ".join(missing))
        return NotFound(ball, missing)
    return tuple(found[name] for name in targets)


def iota_injectivity_check(n: int, radius: int) -> VerificationReport:
    """Check that distinct automorphisms in the ``Y``-ball have distinct ``iota`` images.

    Raises:
        ValidationError: If ``n < 3`` or ``radius < 0``.

    """
    if n < 3:
        raise ValidationError(f"injectivity check needs n >= 3, got {n}")
    if radius < 0:
        raise ValidationError(f"radius must be >= 0, got {radius}")
    report = VerificationReport("injectivity")
    elements = _ball(n, radius)
    images: dict[FreeEndo, tuple[GeneratorTag, ...]] = {}
    collisions = 0
    for word, element in elements:
        image = iota(element)
        if image in images:
            collisions += 1
            first = " ".join(t.label for t in images[image]) or "id"
            second = " ".join(t.label for t in word) or "id"
            report.add(f"injectivity.n={n}.collision", False, f"{first} vs {second}")
        else:
            images[image] = word
    report.add(
        f"injectivity.n={n}.radius={radius}",
        collisions == 0,
        f"{len(elements)} elements, {len(images)} distinct images",
    )
    logger.info("injectivity n=%d radius=%d: %d elements", n, radius, len(elements))
    return report

"""Breadth-first enumeration of the subgroup generated by finitely many automorphisms."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence

from coxaut.domain import (
    CapExceeded,
    CoxAut,
    CoxEndo,
    SubgroupEnumeration,
    ValidationError,
    compose,
    identity_aut,
)

logger = logging.getLogger(__name__)


def enumerate_closure(generators: Sequence[CoxAut], cap: int) -> SubgroupEnumeration | CapExceeded:
    """Close ``{id}`` under left multiplication by ``generators``.

    Elements are keyed by their forward map, whose generator images are
    reduced words, so key equality is ``aut_equal``. The inverse witness of a
    new element is built only once, when it is first reached.

    Args:
        generators: Automorphisms of one common rank.
        cap: Largest order accepted.

    Returns:
        The full element list when the group has at most ``cap`` elements,
        otherwise ``CapExceeded``.

    Raises:
        ValidationError: If ``cap < 1``, no generators are given, or ranks differ.

    """
    if cap < 1:
        raise ValidationError(f"cap must be >= 1, got {cap}")
    if not generators:
        raise ValidationError("closure needs at least one generator")
    rank = generators[0].rank
    for g in generators:
        if g.rank != rank:
            raise ValidationError(f"rank mismatch: {g.rank} vs {rank}")

    ident = identity_aut(rank)
    seen: dict[CoxEndo, CoxAut] = {ident.forward: ident}
    queue: deque[CoxAut] = deque([ident])
    while queue:
        element = queue.popleft()
        for g in generators:
            forward = compose(g.forward, element.forward)
            if forward in seen:
                continue
            if len(seen) >= cap:
                logger.debug("closure of %d generators exceeded cap %d", len(generators), cap)
                return CapExceeded(cap)
            found = CoxAut(forward, compose(element.backward, g.backward))
            seen[forward] = found
            queue.append(found)
    logger.debug("closure of %d generators has order %d", len(generators), len(seen))
    return SubgroupEnumeration(tuple(generators), tuple(seen.values()))

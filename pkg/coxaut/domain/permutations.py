"""Permutations of ``1..n`` used to index the graph automorphisms ``alpha_pi``.

Values are 1-based image tuples; cycle structure and parity come from
``sympy.combinatorics`` so that formatting and Alt(n) membership agree with a
standard implementation. Composition is right-first: ``(p * q)(k) = p(q(k))``.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from sympy.combinatorics import Permutation as SympyPermutation

from coxaut.domain.exceptions import ParseError, ValidationError

_CYCLE = re.compile(r"\(\s*(\d+(?:\s*[,\s]\s*\d+)*)\s*\)")
_SEPARATOR = re.compile(r"[\s,]+")


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection of ``1..degree`` stored as ``images[k - 1] = pi(k)``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        """Reject tuples that are not a bijection of ``1..degree``."""
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValidationError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def degree(self) -> int:
        """Number of points acted on."""
        return len(self.images)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise ValidationError(f"point {point} out of range 1..{self.degree}")
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValidationError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def inverse(self) -> Permutation:
        """Return the inverse permutation."""
        inv = [0] * self.degree
        for k, image in enumerate(self.images, start=1):
            inv[image - 1] = k
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        """Whether every point is fixed."""
        return all(image == k for k, image in enumerate(self.images, start=1))

    @property
    def is_even(self) -> bool:
        """Whether the permutation lies in ``Alt(degree)``."""
        return bool(self.to_sympy().is_even)

    def cycles(self) -> list[tuple[int, ...]]:
        """Return the nontrivial cycles, 1-based, each starting at its smallest point."""
        return [tuple(p + 1 for p in cycle) for cycle in self.to_sympy().cyclic_form]

    def __str__(self) -> str:
        """Cycle notation, e.g. ``(1 3)(2 4)``; the identity prints as ``id``."""
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)

    def to_sympy(self) -> SympyPermutation:
        """Convert to a 0-based ``sympy`` permutation."""
        return SympyPermutation([image - 1 for image in self.images])

    @classmethod
    def from_sympy(cls, perm: SympyPermutation, degree: int | None = None) -> Permutation:
        """Convert a 0-based ``sympy`` permutation, padding to ``degree`` if given."""
        size = degree if degree is not None else perm.size
        array = list(perm.array_form) + list(range(perm.size, size))
        return cls(tuple(image + 1 for image in array))

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        """Return the identity of ``Sym(degree)``."""
        if degree < 1:
            raise ValidationError(f"degree must be >= 1, got {degree}")
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        """Build a permutation from disjoint 1-based cycles.

        Raises:
            ValidationError: If a point is out of range or repeated.

        """
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise ValidationError(f"point {point} out of range 1..{degree}")
                if point in seen:
                    raise ValidationError(f"point {point} appears in more than one cycle")
                seen.add(point)
            for a, b in zip(cycle, [*cycle[1:], *cycle[:1]], strict=True):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def transposition(cls, degree: int, i: int, j: int) -> Permutation:
        """Return ``(i, j)``; ``(i, i)`` is the identity."""
        if i == j:
            return cls.identity(degree)
        return cls.from_cycles(degree, [(i, j)])


def all_permutations(degree: int) -> Iterator[Permutation]:
    """Iterate over ``Sym(degree)`` in lexicographic order of image tuples."""
    for images in itertools.permutations(range(1, degree + 1)):
        yield Permutation(images)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``(1 2)(3 4)`` or ``(1,2)``; ``id`` is the identity.

    Raises:
        ParseError: On a malformed cycle, an out-of-range point or a repeated point.

    """
    if text.strip() in ("id", "()", ""):
        return Permutation.identity(degree)
    cycles: list[list[int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _CYCLE.match(text, pos)
        if match is None:
            raise ParseError.at("expected a cycle such as (1 2)", text, pos)
        points = [int(p) for p in _SEPARATOR.split(match.group(1).strip())]
        try:
            Permutation.from_cycles(degree, [*cycles, points])
        except ValidationError as exc:
            raise ParseError.at(str(exc), text, match.start()) from exc
        cycles.append(points)
        pos = match.end()
    return Permutation.from_cycles(degree, cycles)

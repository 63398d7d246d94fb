"""Exact integer matrices: the ``GL_{n-1}(Z)`` shadow of an automorphism.

Arithmetic goes through ``sympy``'s ``DomainMatrix`` over ``ZZ`` (unbounded
integers, fraction-free determinants) and ``GF(3)``.

The order test relies on Minkowski's lemma: reduction mod 3 is injective on
finite subgroups of ``GL_d(Z)``. A finite-order ``A`` therefore has the same
order as ``A mod 3``, and that order is bounded by the largest order of a
finite-order element of ``GL_d(Z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from sympy import totient
from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from coxaut.domain.automorphisms import FreeEndo
from coxaut.domain.exceptions import ValidationError
from coxaut.domain.orders import Finite, Infinite
from coxaut.domain.words import abelianize


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Square integer matrix stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        """Reject ragged or non-square input."""
        d = len(self.rows)
        for row in self.rows:
            if len(row) != d:
                raise ValidationError(f"matrix is not square: row length {len(row)}, expected {d}")

    @property
    def dimension(self) -> int:
        """Side length ``d``."""
        return len(self.rows)

    @classmethod
    def identity(cls, d: int) -> IntMatrix:
        """Return the ``d x d`` identity."""
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    def to_domain(self) -> DomainMatrix:
        """Convert to a ``DomainMatrix`` over ``ZZ``."""
        d = self.dimension
        return DomainMatrix([[ZZ(x) for x in row] for row in self.rows], (d, d), ZZ)

    @classmethod
    def from_domain(cls, matrix: DomainMatrix) -> IntMatrix:
        """Convert back from a ``DomainMatrix`` over ``ZZ``."""
        return cls(tuple(tuple(int(x) for x in row) for row in matrix.to_Matrix().tolist()))


def abelianization_matrix(f: FreeEndo) -> IntMatrix:
    """Column ``j`` holds the exponent sums of ``f(x_j)``."""
    columns = [abelianize(image).entries for image in f.images]
    m = f.rank
    return IntMatrix(tuple(tuple(columns[j][i] for j in range(m)) for i in range(m)))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product ``a b``."""
    if a.dimension != b.dimension:
        raise ValidationError(f"dimension mismatch: {a.dimension} vs {b.dimension}")
    if a.dimension == 0:
        return a
    return IntMatrix.from_domain(a.to_domain() * b.to_domain())


def mat_det(a: IntMatrix) -> int:
    """Exact determinant."""
    if a.dimension == 0:
        return 1
    return int(a.to_domain().det())


@lru_cache(maxsize=None)
def max_finite_order(d: int) -> int:
    """Largest order of a finite-order element of ``GL_d(Z)``.

    Such an element has characteristic polynomial ``prod Phi_{m_i}`` with
    ``sum phi(m_i) = d`` and order ``lcm(m_i)``; this searches those choices.
    """
    costs = [(m, int(totient(m))) for m in range(2, 2 * d * d + 3)]
    candidates = [(m, cost) for m, cost in costs if cost <= d]
    best = 1

    def search(start: int, budget: int, current: int) -> None:
        nonlocal best
        best = max(best, current)
        for idx in range(start, len(candidates)):
            m, cost = candidates[idx]
            if cost <= budget:
                search(idx + 1, budget - cost, lcm(current, m))

    search(0, d, 1)
    return best


def finite_order_exact(a: IntMatrix) -> Finite | Infinite:
    """Decide whether ``a`` has finite order, and return the order if so.

    Raises:
        ValidationError: If ``det(a)`` is not ``+1`` or ``-1``.

    """
    det = mat_det(a)
    if det not in (1, -1):
        raise ValidationError(f"matrix is not unimodular: det = {det}")
    d = a.dimension
    if d == 0:
        return Finite(1)
    field = GF(3)
    reduced = a.to_domain().convert_to(field)
    ident_mod3 = DomainMatrix.eye(d, field)
    power = reduced
    for k in range(1, max_finite_order(d) + 1):
        if power == ident_mod3:
            if a.to_domain() ** k == DomainMatrix.eye(d, ZZ):
                return Finite(k)
            return Infinite()
        power = power * reduced
    return Infinite()

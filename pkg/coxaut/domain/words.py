"""Word arithmetic in the universal Coxeter group ``W_n`` and the free group ``F_m``.

``W_n`` is the free product of ``n`` copies of ``Z_2``: its only relators are
the squares ``s_i^2``, so deleting equal adjacent letters is a confluent
rewriting system and the reduced word is the normal form. Two elements are
equal iff their reduced letter sequences are identical.

The sign map sends every generator to ``-1``; its kernel is free on
``x_i = s_i s_{i+1}`` and ``to_free_basis`` / ``from_free_basis`` translate
between the two descriptions.

All indices are 1-based, matching ``s_1 ... s_n`` and ``x_1 ... x_m``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import pairwise

from coxaut.domain.exceptions import PreconditionError, ValidationError

FreeLetter = tuple[int, int]
"""A free-group letter ``(index, sign)`` with ``sign`` in ``{+1, -1}``."""


@dataclass(frozen=True, slots=True)
class CoxWord:
    """Reduced word in ``W_n``; the empty word is the identity."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Reject out-of-range letters and unreduced sequences."""
        if self.rank < 1:
            raise ValidationError(f"rank must be >= 1, got {self.rank}")
        _check_indices(self.letters, self.rank)
        for a, b in pairwise(self.letters):
            if a == b:
                raise ValidationError(f"word is not reduced: adjacent letters s{a} s{a}")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        """Whether this is the empty word."""
        return not self.letters


@dataclass(frozen=True, slots=True)
class FreeWord:
    """Freely reduced word in ``F_m``.

    Rank 0 is allowed so that the kernel of the sign map on ``W_1`` (the
    trivial group) still has a home; it only contains the empty word.
    """

    rank: int
    letters: tuple[FreeLetter, ...] = ()

    def __post_init__(self) -> None:
        """Reject bad letters and words that are not freely reduced."""
        if self.rank < 0:
            raise ValidationError(f"rank must be >= 0, got {self.rank}")
        for index, sign in self.letters:
            if sign not in (1, -1):
                raise ValidationError(f"sign must be +1 or -1, got {sign}")
            if not 1 <= index <= self.rank:
                raise ValidationError(f"index x{index} out of range 1..{self.rank}")
        for (i, e), (j, f) in pairwise(self.letters):
            if i == j and e == -f:
                raise ValidationError(f"word is not freely reduced at x{i}")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        """Whether this is the empty word."""
        return not self.letters


@dataclass(frozen=True, slots=True)
class ExpVector:
    """Exponent sums of a free word, one entry per basis element."""

    entries: tuple[int, ...]

    @property
    def dimension(self) -> int:
        """Number of entries (the rank of the source free group)."""
        return len(self.entries)

    def __add__(self, other: ExpVector) -> ExpVector:
        if self.dimension != other.dimension:
            raise ValidationError(f"dimension mismatch: {self.dimension} vs {other.dimension}")
        return ExpVector(tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))


def _check_indices(letters: Iterable[int], rank: int) -> None:
    for letter in letters:
        if not 1 <= letter <= rank:
            raise ValidationError(f"index s{letter} out of range 1..{rank}")


def _push_cox(stack: list[int], letters: Iterable[int]) -> None:
    """Append ``letters`` to ``stack`` deleting each ``s_i s_i`` as it forms."""
    for letter in letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)


def _push_free(stack: list[FreeLetter], letters: Iterable[FreeLetter]) -> None:
    for index, sign in letters:
        if stack and stack[-1] == (index, -sign):
            stack.pop()
        else:
            stack.append((index, sign))


# ---------------------------------------------------------------------------
# W_n
# ---------------------------------------------------------------------------
def cox_reduce(rank: int, raw: Sequence[int]) -> CoxWord:
    """Reduce a raw letter sequence to its normal form.

    Raises:
        ValidationError: If an index lies outside ``1..rank``.

    """
    if rank < 1:
        raise ValidationError(f"rank must be >= 1, got {rank}")
    _check_indices(raw, rank)
    stack: list[int] = []
    _push_cox(stack, raw)
    return CoxWord(rank, tuple(stack))


def _same_rank(u: CoxWord | FreeWord, v: CoxWord | FreeWord) -> None:
    if u.rank != v.rank:
        raise ValidationError(f"rank mismatch: {u.rank} vs {v.rank}")


def cox_mul(u: CoxWord, v: CoxWord) -> CoxWord:
    """Multiply two elements of ``W_n``."""
    _same_rank(u, v)
    stack = list(u.letters)
    _push_cox(stack, v.letters)
    return CoxWord(u.rank, tuple(stack))


def cox_inv(u: CoxWord) -> CoxWord:
    """Invert an element; every generator is an involution, so reverse the letters."""
    return CoxWord(u.rank, u.letters[::-1])


def sign(u: CoxWord) -> int:
    """Evaluate the sign map: ``(-1) ** len(u)``."""
    return -1 if len(u.letters) % 2 else 1


def cyclic_reduce(u: CoxWord) -> tuple[CoxWord, CoxWord]:
    """Split ``u`` as ``conjugator * core * conjugator^-1`` with a cyclically reduced core.

    Equal first and last letters are stripped greedily, so the returned
    conjugator is the outermost one.
    """
    letters = u.letters
    lo, hi = 0, len(letters) - 1
    while hi - lo >= 1 and letters[lo] == letters[hi]:
        lo += 1
        hi -= 1
    core = CoxWord(u.rank, letters[lo : hi + 1])
    conjugator = CoxWord(u.rank, letters[:lo])
    return core, conjugator


def involution_class(u: CoxWord) -> int | None:
    """Return ``i`` when ``u`` is conjugate to ``s_i``, else ``None``.

    In ``W_n`` every involution is conjugate to exactly one generator, so this
    returns an index iff ``u`` is a nontrivial involution.
    """
    core, _ = cyclic_reduce(u)
    if len(core.letters) == 1:
        return core.letters[0]
    return None


def project_to_W2(u: CoxWord) -> CoxWord:  # noqa: N802
    """Apply the projection ``W_n -> W_2`` killing every ``s_i`` with ``i >= 3``."""
    if u.rank < 2:
        raise ValidationError(f"projection to W_2 needs rank >= 2, got {u.rank}")
    stack: list[int] = []
    _push_cox(stack, (letter for letter in u.letters if letter <= 2))
    return CoxWord(2, tuple(stack))


# ---------------------------------------------------------------------------
# F_m
# ---------------------------------------------------------------------------
def free_reduce(rank: int, raw: Sequence[FreeLetter]) -> FreeWord:
    """Freely reduce a raw sequence of signed letters.

    Raises:
        ValidationError: If an index or sign is invalid.

    """
    for index, sgn in raw:
        if sgn not in (1, -1):
            raise ValidationError(f"sign must be +1 or -1, got {sgn}")
        if not 1 <= index <= rank:
            raise ValidationError(f"index x{index} out of range 1..{rank}")
    stack: list[FreeLetter] = []
    _push_free(stack, raw)
    return FreeWord(rank, tuple(stack))


def free_mul(u: FreeWord, v: FreeWord) -> FreeWord:
    """Multiply two elements of ``F_m``."""
    _same_rank(u, v)
    stack = list(u.letters)
    _push_free(stack, v.letters)
    return FreeWord(u.rank, tuple(stack))


def free_inv(u: FreeWord) -> FreeWord:
    """Invert an element of ``F_m``."""
    return FreeWord(u.rank, tuple((index, -sgn) for index, sgn in reversed(u.letters)))


def abelianize(w: FreeWord) -> ExpVector:
    """Return the exponent sum of each basis element."""
    entries = [0] * w.rank
    for index, sgn in w.letters:
        entries[index - 1] += sgn
    return ExpVector(tuple(entries))


# ---------------------------------------------------------------------------
# ker(sign) <-> F_{n-1}
# ---------------------------------------------------------------------------
def _pair_to_free(a: int, b: int) -> list[FreeLetter]:
    """Rewrite ``s_a s_b`` in the basis ``x_i = s_i s_{i+1}`` by telescoping."""
    if a < b:
        return [(i, 1) for i in range(a, b)]
    return [(i, -1) for i in reversed(range(b, a))]


def to_free_basis(u: CoxWord) -> FreeWord:
    """Express an even element of ``W_n`` as a word in ``x_1 ... x_{n-1}``.

    Raises:
        PreconditionError: If ``u`` has odd length (it is not in the kernel).

    """
    if sign(u) != 1:
        raise PreconditionError(f"word of odd length {len(u)} is not in the kernel of the sign map")
    stack: list[FreeLetter] = []
    letters = u.letters
    for pos in range(0, len(letters), 2):
        _push_free(stack, _pair_to_free(letters[pos], letters[pos + 1]))
    return FreeWord(u.rank - 1, tuple(stack))


def from_free_basis(w: FreeWord) -> CoxWord:
    """Substitute ``x_i = s_i s_{i+1}`` and reduce in ``W_{m+1}``."""
    stack: list[int] = []
    for index, sgn in w.letters:
        _push_cox(stack, (index, index + 1) if sgn == 1 else (index + 1, index))
    return CoxWord(w.rank + 1, tuple(stack))

"""Automorphisms of ``W_n`` and endomorphisms of ``F_m`` as generator-image maps.

Composition is right-factor-first everywhere: ``compose(f, g)(w) = f(g(w))``.
Under this convention the product ``sigma_12 sigma_13 sigma_21 sigma_23``
(n = 3) is conjugation by ``x_1 = s_1 s_2`` and its image under ``iota`` is
``g_{x_1}``; the reversed convention gives ``g_{x_1^{-1}}`` instead.

A ``CoxAut`` always carries its inverse as a witness. Automorphism status is
never decided for arbitrary endomorphisms; it is built up from the
involutive generators ``sigma_ij`` and ``alpha_pi``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import reduce
from typing import overload

from coxaut.domain.exceptions import (
    InvariantViolationError,
    NotInducibleError,
    PreconditionError,
    ValidationError,
)
from coxaut.domain.orders import ExceedsCutoff, Finite
from coxaut.domain.permutations import Permutation
from coxaut.domain.words import (
    CoxWord,
    FreeLetter,
    FreeWord,
    _push_cox,
    _push_free,
    cox_inv,
    cox_mul,
    free_inv,
    free_mul,
    involution_class,
    project_to_W2,
    sign,
    to_free_basis,
)


@dataclass(frozen=True, slots=True)
class CoxEndo:
    """Endomorphism of ``W_n`` given by ``images[i - 1] = f(s_i)``.

    Build from untrusted data with :meth:`from_images`; the plain constructor
    is used internally where the invariants hold by construction.
    """

    rank: int
    images: tuple[CoxWord, ...]

    @classmethod
    def from_images(cls, rank: int, images: Sequence[CoxWord]) -> CoxEndo:
        """Validate ranks and that every image squares to the identity.

        Raises:
            ValidationError: If the images do not define an endomorphism.

        """
        if len(images) != rank:
            raise ValidationError(f"expected {rank} generator images, got {len(images)}")
        for index, image in enumerate(images, start=1):
            if image.rank != rank:
                raise ValidationError(f"image of s{index} has rank {image.rank}, expected {rank}")
            if not image.is_identity and involution_class(image) is None:
                raise ValidationError(f"image of s{index} is not an involution")
        return cls(rank, tuple(images))


@dataclass(frozen=True, slots=True)
class CoxAut:
    """Automorphism of ``W_n`` with an inverse witness."""

    forward: CoxEndo
    backward: CoxEndo

    @property
    def rank(self) -> int:
        """Rank ``n`` of the underlying ``W_n``."""
        return self.forward.rank

    @property
    def images(self) -> tuple[CoxWord, ...]:
        """Generator images of the forward map."""
        return self.forward.images

    def inverse(self) -> CoxAut:
        """Swap the map and its witness."""
        return CoxAut(self.backward, self.forward)

    def check_witness(self) -> None:
        """Verify that ``backward`` inverts ``forward`` on every generator.

        Raises:
            InvariantViolationError: If either composite is not the identity.

        """
        ident = identity_endo(self.rank)
        if compose(self.forward, self.backward) != ident or compose(
            self.backward, self.forward
        ) != ident:
            raise InvariantViolationError("inverse witness does not invert the automorphism")


@dataclass(frozen=True, slots=True)
class FreeEndo:
    """Endomorphism of ``F_m`` given by ``images[i - 1] = f(x_i)``."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        """Reject image lists of the wrong length or rank."""
        if len(self.images) != self.rank:
            raise ValidationError(f"expected {self.rank} generator images, got {len(self.images)}")
        for image in self.images:
            if image.rank != self.rank:
                raise ValidationError(f"image has rank {image.rank}, expected {self.rank}")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------
def identity_endo(rank: int) -> CoxEndo:
    """Return the identity endomorphism of ``W_rank``."""
    return CoxEndo(rank, tuple(CoxWord(rank, (i,)) for i in range(1, rank + 1)))


def identity_aut(rank: int) -> CoxAut:
    """Return the identity automorphism of ``W_rank``."""
    ident = identity_endo(rank)
    return CoxAut(ident, ident)


def sigma(i: int, j: int, n: int) -> CoxAut:
    """Partial conjugation: ``s_j -> s_i s_j s_i``, every other generator fixed.

    Raises:
        ValidationError: If ``i == j`` or an index is outside ``1..n``.

    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValidationError(f"sigma({i},{j}) indices out of range 1..{n}")
    if i == j:
        raise ValidationError(f"sigma needs distinct indices, got ({i},{j})")
    images = list(identity_endo(n).images)
    images[j - 1] = CoxWord(n, (i, j, i))
    endo = CoxEndo(n, tuple(images))
    return CoxAut(endo, endo)


def alpha(p: Permutation) -> CoxAut:
    """Graph automorphism permuting the generators: ``s_k -> s_{p(k)}``."""
    n = p.degree

    def endo(q: Permutation) -> CoxEndo:
        return CoxEndo(n, tuple(CoxWord(n, (image,)) for image in q.images))

    return CoxAut(endo(p), endo(p.inverse()))


def conjugation(w: CoxWord) -> CoxAut:
    """Inner automorphism ``u -> w u w^-1`` of ``W_n``."""
    n = w.rank
    w_inv = cox_inv(w)

    def endo(a: CoxWord, a_inv: CoxWord) -> CoxEndo:
        return CoxEndo(
            n, tuple(cox_mul(cox_mul(a, CoxWord(n, (i,))), a_inv) for i in range(1, n + 1))
        )

    return CoxAut(endo(w, w_inv), endo(w_inv, w))


# ---------------------------------------------------------------------------
# Arithmetic on W_n
# ---------------------------------------------------------------------------
def _endo(f: CoxEndo | CoxAut) -> CoxEndo:
    return f.forward if isinstance(f, CoxAut) else f


def apply(f: CoxEndo | CoxAut, u: CoxWord) -> CoxWord:
    """Substitute generator images letterwise and reduce."""
    endo = _endo(f)
    if endo.rank != u.rank:
        raise ValidationError(f"rank mismatch: {endo.rank} vs {u.rank}")
    stack: list[int] = []
    images = endo.images
    for letter in u.letters:
        _push_cox(stack, images[letter - 1].letters)
    return CoxWord(endo.rank, tuple(stack))


@overload
def compose(f: CoxAut, g: CoxAut) -> CoxAut: ...


@overload
def compose(f: CoxEndo, g: CoxEndo) -> CoxEndo: ...


def compose(f: CoxEndo | CoxAut, g: CoxEndo | CoxAut) -> CoxEndo | CoxAut:
    """Return ``f . g`` (``g`` acts first); witnesses compose in reverse order."""
    if isinstance(f, CoxAut) and isinstance(g, CoxAut):
        return CoxAut(compose(f.forward, g.forward), compose(g.backward, f.backward))
    fe, ge = _endo(f), _endo(g)
    if fe.rank != ge.rank:
        raise ValidationError(f"rank mismatch: {fe.rank} vs {ge.rank}")
    return CoxEndo(fe.rank, tuple(apply(fe, image) for image in ge.images))


def product(factors: Iterable[CoxAut], rank: int) -> CoxAut:
    """Compose ``factors`` as a written product: the rightmost factor acts first."""
    return reduce(compose, factors, identity_aut(rank))


def aut_equal(f: CoxEndo | CoxAut, g: CoxEndo | CoxAut) -> bool:
    """Compare generator images as reduced words."""
    fe, ge = _endo(f), _endo(g)
    if fe.rank != ge.rank:
        raise ValidationError(f"rank mismatch: {fe.rank} vs {ge.rank}")
    return fe.images == ge.images


def commutes(f: CoxEndo | CoxAut, g: CoxEndo | CoxAut) -> bool:
    """Whether ``f . g == g . f``."""
    fe, ge = _endo(f), _endo(g)
    return aut_equal(compose(fe, ge), compose(ge, fe))


def order_with_cutoff(f: CoxEndo | CoxAut, cutoff: int) -> Finite | ExceedsCutoff:
    """Iterate ``f`` until it returns to the identity or ``cutoff`` powers are spent."""
    if cutoff < 1:
        raise ValidationError(f"cutoff must be >= 1, got {cutoff}")
    endo = _endo(f)
    ident = identity_endo(endo.rank)
    power = endo
    for k in range(1, cutoff + 1):
        if power == ident:
            return Finite(k)
        if k < cutoff:
            power = compose(endo, power)
    return ExceedsCutoff(cutoff)


def support(f: CoxEndo | CoxAut) -> frozenset[int]:
    """Indices moved by ``f`` together with every letter of a moved image."""
    endo = _endo(f)
    result: set[int] = set()
    for index, image in enumerate(endo.images, start=1):
        if image.letters != (index,):
            result.add(index)
            result.update(image.letters)
    return frozenset(result)


def preserves_kernel(f: CoxEndo | CoxAut) -> bool:
    """Whether every generator image has odd length, so ``ker(sign)`` maps into itself."""
    return all(sign(image) == -1 for image in _endo(f).images)


# ---------------------------------------------------------------------------
# Conjugacy classes of involutions
# ---------------------------------------------------------------------------
def is_special(f: CoxEndo | CoxAut) -> bool:
    """Whether each ``s_i`` is sent to a conjugate of itself."""
    return all(
        involution_class(image) == index for index, image in enumerate(_endo(f).images, start=1)
    )


def spe_quotient_perm(f: CoxEndo | CoxAut) -> Permutation:
    """Return the permutation of involution classes induced by ``f``.

    Raises:
        InvariantViolationError: If an image is not conjugate to a generator or
            the classes are not permuted bijectively.

    """
    classes: list[int] = []
    for index, image in enumerate(_endo(f).images, start=1):
        cls = involution_class(image)
        if cls is None:
            raise InvariantViolationError(f"image of s{index} is not conjugate to a generator")
        classes.append(cls)
    try:
        return Permutation(tuple(classes))
    except ValidationError as exc:
        raise InvariantViolationError("involution classes are not permuted", cause=exc) from exc


def induced_on_W2(f: CoxAut) -> CoxAut:  # noqa: N802
    """Return the automorphism of ``W_2`` induced through the projection.

    Raises:
        NotInducibleError: If some ``f(s_k)`` with ``k >= 3`` survives the
            projection, i.e. ``f`` does not preserve its kernel.

    """
    if f.rank < 2:
        raise ValidationError(f"induced map needs rank >= 2, got {f.rank}")

    def descend(endo: CoxEndo) -> CoxEndo:
        projected = [project_to_W2(image) for image in endo.images]
        for index, image in enumerate(projected[2:], start=3):
            if not image.is_identity:
                raise NotInducibleError(f"image of s{index} does not project to the identity")
        return CoxEndo(2, (projected[0], projected[1]))

    return CoxAut(descend(f.forward), descend(f.backward))


# ---------------------------------------------------------------------------
# F_m and the embedding iota
# ---------------------------------------------------------------------------
def free_identity_endo(rank: int) -> FreeEndo:
    """Return the identity endomorphism of ``F_rank``."""
    return FreeEndo(rank, tuple(FreeWord(rank, ((i, 1),)) for i in range(1, rank + 1)))


def free_apply(f: FreeEndo, w: FreeWord) -> FreeWord:
    """Substitute images letterwise; a negative letter substitutes the inverted image."""
    if f.rank != w.rank:
        raise ValidationError(f"rank mismatch: {f.rank} vs {w.rank}")
    stack: list[FreeLetter] = []
    for index, sgn in w.letters:
        image = f.images[index - 1]
        _push_free(stack, image.letters if sgn == 1 else free_inv(image).letters)
    return FreeWord(f.rank, tuple(stack))


def free_compose(f: FreeEndo, g: FreeEndo) -> FreeEndo:
    """Return ``f . g`` (``g`` acts first)."""
    if f.rank != g.rank:
        raise ValidationError(f"rank mismatch: {f.rank} vs {g.rank}")
    return FreeEndo(f.rank, tuple(free_apply(f, image) for image in g.images))


def free_equal(f: FreeEndo, g: FreeEndo) -> bool:
    """Compare generator images as freely reduced words."""
    if f.rank != g.rank:
        raise ValidationError(f"rank mismatch: {f.rank} vs {g.rank}")
    return f.images == g.images


def inner(w: FreeWord) -> FreeEndo:
    """Conjugation ``g_w: x_i -> w x_i w^-1``."""
    m = w.rank
    w_inv = free_inv(w)
    return FreeEndo(
        m, tuple(free_mul(free_mul(w, FreeWord(m, ((i, 1),))), w_inv) for i in range(1, m + 1))
    )


def iota(f: CoxEndo | CoxAut) -> FreeEndo:
    """Restrict ``f`` to ``ker(sign)`` and express it on the basis ``x_i = s_i s_{i+1}``.

    Raises:
        PreconditionError: If ``f`` does not preserve the kernel.

    """
    endo = _endo(f)
    if not preserves_kernel(endo):
        raise PreconditionError("endomorphism does not preserve the kernel of the sign map")
    images = endo.images
    return FreeEndo(
        endo.rank - 1,
        tuple(to_free_basis(cox_mul(images[i], images[i + 1])) for i in range(endo.rank - 1)),
    )

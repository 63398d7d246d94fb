"""Text formats for words, automorphisms, permutations and matrices.

Words in ``W_n`` are written ``s1 s2 s1`` (``e`` is the identity) and words
in ``F_m`` as ``x1 x2^-1 x1^3``. An automorphism is given either as a mapping
``s1 -> s2 s1 s2; s2 -> s2`` (clauses separated by ``;`` or newlines, omitted
generators fixed) or as a written product of generators
``sigma(1,2) alpha[(1 2)(3 4)] id``, whose rightmost factor acts first.
Formatters write one ``x<k>`` or ``x<k>^-1`` token per free letter and one
mapping clause per line.

Outside strict mode unreduced words are reduced silently. Every parse error
carries the byte offset of the offending token.
"""

from __future__ import annotations

import re
from collections.abc import Iterator

from coxaut.domain import (
    CoxAut,
    CoxEndo,
    CoxWord,
    ExpVector,
    FreeEndo,
    FreeWord,
    IntMatrix,
    ParseError,
    Permutation,
    ValidationError,
    alpha,
    cox_reduce,
    free_reduce,
    identity_aut,
    parse_cycles,
    product,
    sigma,
)

_WORD_TOKENS = re.compile(
    r"(?P<gen>s(?P<index>\d+))|(?P<ident>e\b)|(?P<skip>[\s*.]+)|(?P<error>.)"
)
_FREE_TOKENS = re.compile(
    r"(?P<gen>x(?P<index>\d+)(?:\^(?P<power>[+-]?\d+))?)|(?P<ident>[e1]\b)"
    r"|(?P<skip>[\s*.]+)|(?P<error>.)"
)
_FACTOR_TOKENS = re.compile(
    r"(?P<sigma>sigma\(\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\))"
    r"|(?P<alpha>alpha\[(?P<cycles>[^\]]*)\])"
    r"|(?P<ident>id\b)|(?P<skip>[\s*.]+)|(?P<error>.)"
)
_CLAUSE = re.compile(r"[^;\n]+")
_MAPSTO = re.compile(r"^\s*s(\d+)\s*->")


def _tokens(pattern: re.Pattern[str], text: str) -> Iterator[re.Match[str]]:
    for match in pattern.finditer(text):
        if match.lastgroup == "error":
            raise ParseError.at(f"unexpected character {match.group()!r}", text, match.start())
        if match.lastgroup != "skip":
            yield match


# ---------------------------------------------------------------------------
# W_n words
# ---------------------------------------------------------------------------
def parse_word(text: str, n: int, *, strict: bool = False) -> CoxWord:
    """Parse a word in ``W_n``.

    Args:
        text: Letters ``s1 .. sn`` separated by spaces, ``*`` or ``.``; ``e`` is empty.
        n: Rank.
        strict: Reject words with equal adjacent letters instead of reducing.

    Raises:
        ParseError: On a bad token, an out-of-range letter, or (strict) an
            unreduced word.

    """
    letters: list[int] = []
    for match in _tokens(_WORD_TOKENS, text):
        if match.lastgroup == "ident":
            continue
        index = int(match.group("index"))
        if not 1 <= index <= n:
            raise ParseError.at(f"generator s{index} out of range 1..{n}", text, match.start())
        if strict and letters and letters[-1] == index:
            raise ParseError.at(f"word is not reduced at s{index}", text, match.start())
        letters.append(index)
    return cox_reduce(n, letters)


def format_word(w: CoxWord) -> str:
    """Inverse of :func:`parse_word`."""
    return " ".join(f"s{letter}" for letter in w.letters) or "e"


# ---------------------------------------------------------------------------
# F_m words
# ---------------------------------------------------------------------------
def parse_free_word(text: str, m: int, *, strict: bool = False) -> FreeWord:
    """Parse a word in ``F_m`` such as ``x1 x2^-1 x1^3``; ``e`` or ``1`` is empty.

    Raises:
        ParseError: On a bad token, an out-of-range letter, or (strict) an
            unreduced word.

    """
    raw: list[tuple[int, int]] = []
    for match in _tokens(_FREE_TOKENS, text):
        if match.lastgroup == "ident":
            continue
        index = int(match.group("index"))
        if not 1 <= index <= m:
            raise ParseError.at(f"generator x{index} out of range 1..{m}", text, match.start())
        power = int(match.group("power") or 1)
        letter = (index, 1 if power > 0 else -1)
        if strict and raw and power and raw[-1] == (index, -letter[1]):
            raise ParseError.at(f"word is not freely reduced at x{index}", text, match.start())
        raw.extend([letter] * abs(power))
    return free_reduce(m, raw)


def format_free_word(w: FreeWord) -> str:
    """Inverse of :func:`parse_free_word`: one ``x<k>`` or ``x<k>^-1`` token per letter."""
    return " ".join(f"x{index}" if sgn == 1 else f"x{index}^-1" for index, sgn in w.letters) or "e"


def format_vector(v: ExpVector) -> str:
    """Exponent vector as ``(a, b, ...)``."""
    return "(" + ", ".join(str(e) for e in v.entries) + ")"


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------
def parse_mapping(text: str, n: int, *, strict: bool = False) -> CoxEndo:
    """Parse ``s1 -> w1; s2 -> w2; ...`` into an endomorphism; omitted generators are fixed.

    Raises:
        ParseError: On malformed clauses, repeated generators, or images that
            are not involutions.

    """
    images: dict[int, CoxWord] = {}
    for clause in _CLAUSE.finditer(text):
        body = clause.group()
        if not body.strip():
            continue
        head = _MAPSTO.match(body)
        if head is None:
            raise ParseError.at("expected 's<k> -> <word>'", text, clause.start())
        index = int(head.group(1))
        if not 1 <= index <= n:
            raise ParseError.at(f"generator s{index} out of range 1..{n}", text, clause.start())
        if index in images:
            raise ParseError.at(f"s{index} is mapped twice", text, clause.start())
        image_text = body[head.end() :]
        try:
            images[index] = parse_word(image_text, n, strict=strict)
        except ParseError as exc:
            raise exc.shifted(text, clause.start() + head.end()) from exc
    full = [images.get(k, CoxWord(n, (k,))) for k in range(1, n + 1)]
    try:
        return CoxEndo.from_images(n, full)
    except ValidationError as exc:
        raise ParseError(str(exc), offset=0, cause=exc) from exc


def parse_product(text: str, n: int) -> CoxAut:
    """Parse a written product of ``sigma(i,j)``, ``alpha[<cycles>]`` and ``id`` factors.

    Raises:
        ParseError: On a bad factor or out-of-range indices.

    """
    factors: list[CoxAut] = []
    for match in _tokens(_FACTOR_TOKENS, text):
        kind = match.lastgroup
        if kind == "ident":
            factors.append(identity_aut(n))
        elif kind == "sigma":
            try:
                factors.append(sigma(int(match.group("i")), int(match.group("j")), n))
            except ValidationError as exc:
                raise ParseError.at(str(exc), text, match.start()) from exc
        else:
            try:
                perm = parse_cycles(match.group("cycles"), n)
            except ParseError as exc:
                raise exc.shifted(text, match.start("cycles")) from exc
            factors.append(alpha(perm))
    return product(factors, n)


def parse_aut(text: str, n: int, *, strict: bool = False) -> CoxAut | CoxEndo:
    """Parse either form: a mapping gives a ``CoxEndo``, a product a ``CoxAut``."""
    if "->" in text:
        return parse_mapping(text, n, strict=strict)
    return parse_product(text, n)


def require_aut(text: str, n: int, *, strict: bool = False) -> CoxAut:
    """Parse an automorphism that must carry an inverse witness.

    Raises:
        ParseError: If ``text`` is a mapping rather than a product of generators.

    """
    parsed = parse_aut(text, n, strict=strict)
    if isinstance(parsed, CoxEndo):
        raise ParseError(
            "this command needs a product of generators such as 'sigma(1,2) alpha[(1 2)]'",
            offset=0,
        )
    return parsed


def format_aut(f: CoxAut | CoxEndo, *, sep: str = "\n") -> str:
    """Mapping text of the forward map, one generator per line; parses back to the same map."""
    endo = f.forward if isinstance(f, CoxAut) else f
    return sep.join(
        f"s{index} -> {format_word(image)}" for index, image in enumerate(endo.images, start=1)
    )


def format_free_endo(f: FreeEndo, *, sep: str = "\n") -> str:
    """Mapping text ``x1 -> ...``, one generator per line unless ``sep`` says otherwise."""
    return sep.join(
        f"x{index} -> {format_free_word(image)}" for index, image in enumerate(f.images, start=1)
    )


# ---------------------------------------------------------------------------
# Permutations and matrices
# ---------------------------------------------------------------------------
def parse_permutation(text: str, n: int) -> Permutation:
    """Cycle notation ``(1 2)(3 4)``; ``id`` is the identity."""
    return parse_cycles(text, n)


def format_permutation(p: Permutation) -> str:
    """Inverse of :func:`parse_permutation`."""
    return str(p)


def parse_matrix(text: str) -> IntMatrix:
    """Parse rows separated by ``;`` with entries separated by spaces or commas.

    Raises:
        ParseError: On a non-integer entry or a non-square shape.

    """
    rows: list[tuple[int, ...]] = []
    for clause in re.finditer(r"[^;]+", text):
        entries: list[int] = []
        for match in re.finditer(r"[^\s,\[\]]+", clause.group()):
            try:
                entries.append(int(match.group()))
            except ValueError as exc:
                position = clause.start() + match.start()
                raise ParseError.at(f"not an integer: {match.group()!r}", text, position) from exc
        if entries:
            rows.append(tuple(entries))
    try:
        return IntMatrix(tuple(rows))
    except ValidationError as exc:
        raise ParseError(str(exc), offset=0, cause=exc) from exc


def format_matrix(a: IntMatrix) -> str:
    """Inverse of :func:`parse_matrix`."""
    return "; ".join(" ".join(str(x) for x in row) for row in a.rows)

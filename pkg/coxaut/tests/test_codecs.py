"""Tests for the command-line text formats."""

from __future__ import annotations

import random

import pytest

from coxaut.domain import (
    CoxAut,
    CoxEndo,
    CoxWord,
    FreeWord,
    IntMatrix,
    ParseError,
    Permutation,
    alpha,
    aut_equal,
    compose,
    cox_reduce,
    free_reduce,
    identity_aut,
    iota,
    product,
    sigma,
)
from coxaut.interface.cli.codecs import (
    format_aut,
    format_free_endo,
    format_free_word,
    format_matrix,
    format_permutation,
    format_word,
    parse_aut,
    parse_free_word,
    parse_mapping,
    parse_matrix,
    parse_permutation,
    parse_product,
    parse_word,
    require_aut,
)


class TestWords:
    def test_reduces_by_default(self) -> None:
        assert parse_word("s1 s2 s2 s3", 3).letters == (1, 3)

    def test_separators_and_identity(self) -> None:
        assert parse_word("s1*s2.s3", 3).letters == (1, 2, 3)
        assert parse_word("e", 3).is_identity
        assert parse_word("", 3).is_identity

    def test_strict_rejects_unreduced(self) -> None:
        with pytest.raises(ParseError, match="not reduced") as info:
            parse_word("s1 s2 s2 s3", 3, strict=True)
        assert info.value.offset == 6

    def test_out_of_range(self) -> None:
        with pytest.raises(ParseError, match="out of range") as info:
            parse_word("s1 s4", 3)
        assert info.value.offset == 3

    def test_bad_character(self) -> None:
        with pytest.raises(ParseError, match="unexpected character") as info:
            parse_word("s1 t", 3)
        assert info.value.offset == 3

    def test_format(self) -> None:
        assert format_word(CoxWord(3, (1, 2, 1))) == "s1 s2 s1"
        assert format_word(CoxWord(3)) == "e"


class TestFreeWords:
    def test_powers(self) -> None:
        w = parse_free_word("x1 x2^-1 x1^3", 2)
        assert w.letters == ((1, 1), (2, -1), (1, 1), (1, 1), (1, 1))
        assert format_free_word(w) == "x1 x2^-1 x1 x1 x1"

    def test_format_writes_one_token_per_letter(self) -> None:
        w = FreeWord(2, ((1, 1), (1, 1), (2, -1), (2, -1)))
        assert format_free_word(w) == "x1 x1 x2^-1 x2^-1"

    def test_reduces_by_default(self) -> None:
        assert parse_free_word("x1 x1^-1 x2", 2).letters == ((2, 1),)

    def test_strict_rejects_cancellation(self) -> None:
        with pytest.raises(ParseError) as info:
            parse_free_word("x1 x1^-1", 2, strict=True)
        assert info.value.offset == 3

    def test_identity(self) -> None:
        assert parse_free_word("1", 2).is_identity
        assert format_free_word(parse_free_word("e", 2)) == "e"

    def test_out_of_range(self) -> None:
        with pytest.raises(ParseError, match="x3"):
            parse_free_word("x3", 2)


class TestMapping:
    def test_parse(self) -> None:
        f = parse_mapping("s1 -> s2 s1 s2; s2 -> s2", 2)
        assert f.images == (CoxWord(2, (2, 1, 2)), CoxWord(2, (2,)))

    def test_omitted_generators_fixed(self) -> None:
        f = parse_mapping("s2 -> s1 s2 s1", 3)
        assert aut_equal(f, sigma(1, 2, 3))

    def test_newline_separated(self) -> None:
        f = parse_mapping("s1 -> s2\ns2 -> s1", 2)
        assert f.images == (CoxWord(2, (2,)), CoxWord(2, (1,)))

    def test_offset_inside_image(self) -> None:
        with pytest.raises(ParseError) as info:
            parse_mapping("s1 -> s9", 2)
        assert info.value.offset == 6

    def test_mapped_twice(self) -> None:
        with pytest.raises(ParseError, match="mapped twice") as info:
            parse_mapping("s1 -> s2; s1 -> s1", 2)
        assert info.value.offset == 9

    def test_not_an_involution(self) -> None:
        with pytest.raises(ParseError, match="not an involution"):
            parse_mapping("s1 -> s1 s2", 2)

    def test_malformed_clause(self) -> None:
        with pytest.raises(ParseError, match="expected"):
            parse_mapping("s1 = s2", 2)


class TestProduct:
    def test_rightmost_factor_first(self) -> None:
        f = parse_product("sigma(1,2) alpha[(1 2)]", 3)
        s12 = sigma(1, 2, 3)
        a12 = parse_product("alpha[(1 2)]", 3)
        assert aut_equal(f, compose(s12, a12))

    def test_identity_spellings(self) -> None:
        assert aut_equal(parse_product("id", 3), identity_aut(3))
        assert aut_equal(parse_product("", 3), identity_aut(3))

    def test_bad_sigma(self) -> None:
        with pytest.raises(ParseError) as info:
            parse_product("id sigma(1,4)", 3)
        assert info.value.offset == 3

    def test_bad_cycle_offset(self) -> None:
        with pytest.raises(ParseError) as info:
            parse_product("alpha[(1 5)]", 3)
        assert info.value.offset == 6

    def test_parse_aut_dispatch(self) -> None:
        assert isinstance(parse_aut("sigma(1,2)", 2), CoxAut)
        assert isinstance(parse_aut("s1 -> s2; s2 -> s1", 2), CoxEndo)

    def test_require_aut_rejects_mapping(self) -> None:
        with pytest.raises(ParseError, match="product of generators"):
            require_aut("s1 -> s2; s2 -> s1", 2)

    def test_format_aut_parses_back(self) -> None:
        f = parse_product("sigma(1,2) alpha[(2 3)]", 3)
        text = format_aut(f)
        assert aut_equal(parse_mapping(text, 3), f)
        assert format_aut(sigma(1, 2, 2)) == "s1 -> s1\ns2 -> s1 s2 s1"

    def test_format_aut_one_line_per_generator(self) -> None:
        lines = format_aut(sigma(1, 2, 3)).splitlines()
        assert lines == ["s1 -> s1", "s2 -> s1 s2 s1", "s3 -> s3"]
        assert format_aut(sigma(1, 2, 3), sep="; ") == "s1 -> s1; s2 -> s1 s2 s1; s3 -> s3"

    def test_format_free_endo(self) -> None:
        image = iota(sigma(1, 2, 3))
        assert format_free_endo(image) == "x1 -> x1^-1\nx2 -> x1 x1 x2"
        assert format_free_endo(image, sep="; ") == "x1 -> x1^-1; x2 -> x1 x1 x2"


class TestPermutationsAndMatrices:
    def test_permutation(self) -> None:
        p = parse_permutation("(1 2 3)", 4)
        assert p == Permutation((2, 3, 1, 4))
        assert format_permutation(p) == "(1 2 3)"

    def test_matrix(self) -> None:
        a = parse_matrix("-1 2; 0 1")
        assert a == IntMatrix(((-1, 2), (0, 1)))
        assert format_matrix(a) == "-1 2; 0 1"

    def test_matrix_commas(self) -> None:
        assert parse_matrix("[1, 0]; [0, 1]") == IntMatrix.identity(2)

    def test_matrix_bad_entry(self) -> None:
        with pytest.raises(ParseError, match="not an integer") as info:
            parse_matrix("1 x; 0 1")
        assert info.value.offset == 2

    def test_matrix_not_square(self) -> None:
        with pytest.raises(ParseError):
            parse_matrix("1 2; 3")


class TestRoundTrips:
    def test_cox_words(self) -> None:
        rng = random.Random(41)
        for _ in range(10_000):
            n = rng.randint(1, 5)
            w = cox_reduce(n, [rng.randint(1, n) for _ in range(rng.randint(0, 12))])
            assert parse_word(format_word(w), n) == w
            assert parse_word(format_word(w), n, strict=True) == w

    def test_free_words(self) -> None:
        rng = random.Random(42)
        for _ in range(10_000):
            m = rng.randint(1, 4)
            raw = [(rng.randint(1, m), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))]
            w = free_reduce(m, raw)
            assert parse_free_word(format_free_word(w), m) == w
            assert parse_free_word(format_free_word(w), m, strict=True) == w

    def test_automorphism_mappings(self) -> None:
        rng = random.Random(43)
        for _ in range(1000):
            n = rng.randint(2, 5)
            gens = [sigma(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
            gens += [alpha(Permutation.transposition(n, i, i + 1)) for i in range(1, n)]
            f = product([rng.choice(gens) for _ in range(rng.randint(0, 6))], n)
            assert aut_equal(parse_mapping(format_aut(f), n, strict=True), f)
            assert aut_equal(parse_mapping(format_aut(f, sep="; "), n), f)

"""Tests for permutations and cycle notation."""

from __future__ import annotations

import pytest
from sympy.combinatorics import Permutation as SympyPermutation

from coxaut.domain import ParseError, Permutation, ValidationError, all_permutations, parse_cycles


class TestPermutation:
    def test_rejects_non_bijection(self) -> None:
        with pytest.raises(ValidationError):
            Permutation((1, 1, 3))

    def test_call_and_range(self) -> None:
        p = Permutation((2, 3, 1))
        assert p(1) == 2
        with pytest.raises(ValidationError):
            p(4)

    def test_product_is_right_first(self) -> None:
        p = Permutation.transposition(3, 1, 2)
        q = Permutation.transposition(3, 2, 3)
        assert (p * q).images == (2, 3, 1)

    def test_inverse(self) -> None:
        p = Permutation((2, 3, 1))
        assert p.inverse().images == (3, 1, 2)
        assert (p * p.inverse()).is_identity

    def test_parity(self) -> None:
        assert Permutation((2, 3, 1)).is_even
        assert not Permutation.transposition(3, 1, 2).is_even

    def test_str(self) -> None:
        assert str(Permutation.from_cycles(4, [(1, 3), (2, 4)])) == "(1 3)(2 4)"
        assert str(Permutation.identity(3)) == "id"

    def test_transposition_of_a_point_is_identity(self) -> None:
        assert Permutation.transposition(3, 2, 2).is_identity

    def test_from_cycles_rejects_repeats(self) -> None:
        with pytest.raises(ValidationError, match="more than one cycle"):
            Permutation.from_cycles(3, [(1, 2), (2, 3)])

    def test_sympy_padding(self) -> None:
        p = Permutation.from_sympy(SympyPermutation([1, 0]), 4)
        assert p.images == (2, 1, 3, 4)
        assert Permutation.from_sympy(p.to_sympy()) == p

    def test_all_permutations(self) -> None:
        perms = list(all_permutations(3))
        assert len(perms) == 6
        assert len(set(perms)) == 6


class TestParseCycles:
    def test_space_and_comma_separators(self) -> None:
        assert parse_cycles("(1 3)(2 4)", 4) == Permutation((3, 4, 1, 2))
        assert parse_cycles("(1,2)", 3) == Permutation((2, 1, 3))

    @pytest.mark.parametrize("text", ["id", "()", "", "  "])
    def test_identity_spellings(self, text: str) -> None:
        assert parse_cycles(text, 3).is_identity

    def test_out_of_range_point(self) -> None:
        with pytest.raises(ParseError) as info:
            parse_cycles("(1 5)", 4)
        assert info.value.offset == 0

    def test_repeated_point_points_at_second_cycle(self) -> None:
        with pytest.raises(ParseError) as info:
            parse_cycles("(1 2)(2 3)", 3)
        assert info.value.offset == 5

    def test_garbage(self) -> None:
        with pytest.raises(ParseError, match="expected a cycle") as info:
            parse_cycles("(1 2) x", 3)
        assert info.value.offset == 6

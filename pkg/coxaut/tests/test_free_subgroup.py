"""Tests for the rank-2 free subgroup of iota(Aut(W_n))."""

from __future__ import annotations

import pytest

from coxaut.application.use_cases import free_ball, partial_conjugation_word, prop34_check
from coxaut.domain import (
    FreeEndo,
    FreeWord,
    ValidationError,
    aut_equal,
    inner,
    iota,
    product,
    sigma,
)


class TestPartialConjugationWord:
    def test_written_product(self) -> None:
        expected = product([sigma(1, 2, 3), sigma(1, 3, 3), sigma(2, 1, 3), sigma(2, 3, 3)], 3)
        assert aut_equal(partial_conjugation_word(1, 2, 3), expected)

    def test_image_is_inner(self) -> None:
        assert iota(partial_conjugation_word(1, 2, 3)) == inner(FreeWord(2, ((1, 1),)))


class TestFreeBall:
    def _generators(self) -> list[FreeEndo]:
        return [
            inner(FreeWord(2, ((1, 1),))),
            inner(FreeWord(2, ((2, 1),))),
            inner(FreeWord(2, ((1, -1),))),
            inner(FreeWord(2, ((2, -1),))),
        ]

    def test_radius_one(self) -> None:
        assert free_ball(self._generators(), 1) == (5, 5, 4)

    def test_radius_two(self) -> None:
        assert free_ball(self._generators(), 2) == (17, 17, 12)


class TestProp34Check:
    def test_rank_three_ball_eight(self) -> None:
        report = prop34_check(3, 8)
        assert report.passed, report.lines()
        ball = report.checks[-1]
        assert ball.check_id == "prop34.n=3.ball=8"
        assert ball.detail == "13121/13121 distinct, 8748 of length 8"

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_images_are_the_inner_generators(self, n: int) -> None:
        report = prop34_check(n, 4)
        assert report.passed, report.lines()
        assert [c.check_id for c in report.checks] == [
            f"prop34.n={n}.word1",
            f"prop34.n={n}.word2",
            f"prop34.n={n}.ball=4",
        ]
        assert report.checks[-1].detail == "161/161 distinct, 108 of length 4"

    def test_validation(self) -> None:
        with pytest.raises(ValidationError):
            prop34_check(2, 4)
        with pytest.raises(ValidationError):
            prop34_check(3, 0)

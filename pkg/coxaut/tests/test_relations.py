"""Tests for the conjugation and diagram relation suites."""

from __future__ import annotations

import pytest

from coxaut.application.use_cases import verify_conjugation_relations, verify_diagram_relations
from coxaut.domain import ValidationError


class TestConjugationRelations:
    def test_rank_three(self) -> None:
        report = verify_conjugation_relations(3)
        assert report.passed
        assert len(report.checks) == 6
        assert report.checks[0].check_id == "relations.n=3.sigma(1,2)"
        assert report.checks[0].detail == "6/6 permutations"

    def test_rank_four(self) -> None:
        assert verify_conjugation_relations(4).passed

    def test_rank_one_rejected(self) -> None:
        with pytest.raises(ValidationError):
            verify_conjugation_relations(1)


class TestDiagramRelations:
    def test_rank_four(self) -> None:
        report = verify_diagram_relations(4, 64)
        assert report.passed, report.lines()
        ids = [c.check_id for c in report.checks]
        assert len(ids) == 4 + 6 + 1
        assert "figure1.n=4.edge.sigma(1,2)-alpha(1,2)" in ids
        assert ids[-1] == "figure1.n=4.b-type"
        assert report.checks[-1].detail == "order 48 divides 48"

    def test_infinite_edge_detail(self) -> None:
        report = verify_diagram_relations(3, 16)
        edge = next(c for c in report.checks if c.check_id.endswith("sigma(1,2)-alpha(1,2)"))
        assert edge.passed
        assert edge.detail == "label inf, order > 16, matrix infinite"

    def test_large_rank_skips_subgroup(self) -> None:
        report = verify_diagram_relations(7, 16)
        assert report.passed
        assert not any(c.check_id.endswith("b-type") for c in report.checks)

    def test_cutoff_too_small(self) -> None:
        with pytest.raises(ValidationError):
            verify_diagram_relations(4, 7)

    def test_rank_too_small(self) -> None:
        with pytest.raises(ValidationError):
            verify_diagram_relations(2, 16)

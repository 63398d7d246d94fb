"""Tests for the command-line front end."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from coxaut.interface.cli import build_parser, run

_ENV_KEYS = (
    "LOG_FORMAT",
    "LOG_LEVEL",
    "CLOSURE_CAP",
    "ORDER_CUTOFF",
    "SPE_CUTOFF",
    "STRICT_PARSING",
    "RANDOM_SEED",
    "SAMPLE_SIZE",
)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for key in _ENV_KEYS:
        monkeypatch.delenv(key, raising=False)


def _out(capsys: pytest.CaptureFixture[str]) -> list[str]:
    return capsys.readouterr().out.strip().splitlines()


class TestParser:
    def test_help_exits_zero(self) -> None:
        assert run(["--help"]) == 0

    def test_missing_command(self) -> None:
        assert run([]) == 2

    def test_missing_argument(self) -> None:
        assert run(["reduce", "--n", "3"]) == 2

    def test_verify_needs_suite(self) -> None:
        assert run(["verify"]) == 2

    def test_every_leaf_has_json_flag(self) -> None:
        args = build_parser().parse_args(["verify", "floor", "--json"])
        assert args.json is True


class TestWordCommands:
    def test_reduce(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["reduce", "--n", "3", "s1 s2 s2 s3"]) == 0
        assert _out(capsys) == ["s1 s3"]

    def test_reduce_strict(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["reduce", "--n", "3", "--strict", "s1 s1"]) == 2
        err = capsys.readouterr().err
        assert err.startswith("error: ")
        assert "offset 3" in err

    def test_strict_from_env(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("STRICT_PARSING", "true")
        assert run(["reduce", "--n", "3", "s2 s2"]) == 2

    def test_out_of_range(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["reduce", "--n", "2", "s1 s3"]) == 2
        assert "offset 3" in capsys.readouterr().err

    def test_mul(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["mul", "--n", "3", "s1 s2", "s2 s3"]) == 0
        assert _out(capsys) == ["s1 s3"]

    def test_project(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["project", "--n", "3", "s1 s3 s2"]) == 0
        assert _out(capsys) == ["s1 s2"]

    def test_abelianize(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["abelianize", "--rank", "2", "x1 x2^-1 x1"]) == 0
        assert _out(capsys) == ["(2, -1)"]

    def test_json_value(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["reduce", "--n", "3", "s1 s1 s2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"command": "reduce", "result": "s2", "details": {}}


class TestAutomorphismCommands:
    def test_apply(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["apply", "--n", "3", "sigma(1,2)", "s2"]) == 0
        assert _out(capsys) == ["s1 s2 s1"]

    def test_apply_mapping(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["apply", "--n", "2", "s1 -> s2; s2 -> s1", "s1 s2"]) == 0
        assert _out(capsys) == ["s2 s1"]

    def test_compose(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["compose", "--n", "2", "sigma(1,2)", "sigma(1,2)"]) == 0
        assert _out(capsys) == ["s1 -> s1", "s2 -> s2"]

    def test_order_finite(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["order", "--n", "3", "sigma(1,2) alpha[(2 3)]"]) == 0
        assert _out(capsys) == ["order 4"]

    def test_order_infinite(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["order", "--n", "3", "sigma(1,2) alpha[(1 2)]", "--cutoff", "20"]) == 0
        assert _out(capsys) == ["infinite (matrix certificate)"]

    def test_order_of_non_invertible_mapping(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["order", "--n", "2", "s1 -> s1 s2 s1", "--cutoff", "5"]) == 0
        assert _out(capsys) == ["order > 5"]

    def test_embed(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["embed", "--n", "3", "sigma(1,2)", "--matrix"]) == 0
        assert _out(capsys) == ["x1 -> x1^-1", "x2 -> x1 x1 x2", "-1 2; 0 1"]

    def test_embed_needs_kernel(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["embed", "--n", "2", "s1 -> e"]) == 1
        assert "kernel" in capsys.readouterr().err

    def test_special(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["special", "--n", "3", "sigma(1,2)"]) == 0
        assert run(["special", "--n", "3", "alpha[(1 2)]"]) == 0
        assert _out(capsys) == ["special; classes id", "not special; classes (1 2)"]

    def test_project_induced(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["project", "--n", "4", "--induced", "sigma(3,1)"]) == 0
        assert _out(capsys) == ["s1 -> s1", "s2 -> s2"]

    def test_project_not_inducible(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["project", "--n", "3", "--induced", "alpha[(1 3)]"]) == 1

    def test_matrix_order(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["matrix-order", "0 -1; 1 0"]) == 0
        assert run(["matrix-order", "1 1; 0 1"]) == 0
        assert _out(capsys) == ["order 4", "infinite"]

    def test_matrix_not_unimodular(self) -> None:
        assert run(["matrix-order", "2 0; 0 1"]) == 2

    def test_closure(self, capsys: pytest.CaptureFixture[str]) -> None:
        args = ["closure", "--n", "4", "sigma(1,2)", "alpha[(2 3)]", "alpha[(3 4)]"]
        assert run(args) == 0
        assert _out(capsys) == ["order 48"]

    def test_closure_cap(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["closure", "--n", "3", "sigma(1,2)", "alpha[(1 2)]", "--cap", "50"]) == 1
        assert _out(capsys) == ["closure exceeds cap 50"]

    def test_closure_cap_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        args = ["closure", "--n", "3", "sigma(1,2)", "alpha[(1 2)]", "--cap", "50", "--json"]
        assert run(args) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["command"] == "closure"
        assert payload["result"] == "closure exceeds cap 50"
        assert payload["details"] == {"cap": 50, "exceeded": True}

    def test_closure_rejects_mapping(self) -> None:
        assert run(["closure", "--n", "2", "s1 -> s2; s2 -> s1"]) == 2


class TestVerify:
    def test_relations(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "relations", "--n", "3"]) == 0
        lines = _out(capsys)
        assert len(lines) == 6
        assert all(line.startswith("PASS relations.n=3.") for line in lines)

    def test_figure1(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "figure1", "--n", "4", "--cutoff", "16"]) == 0
        assert _out(capsys)[-1] == "PASS figure1.n=4.b-type order 48 divides 48"

    def test_floor(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "floor", "--max-n", "10"]) == 0
        assert len(_out(capsys)) == 7

    def test_prop34_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "prop34", "--n", "3", "--ball", "3", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["suite"] == "prop34"
        assert payload["passed"] is True
        assert len(payload["checks"]) == 3

    def test_theorem_d(self) -> None:
        assert run(["verify", "theorem-d", "--n", "4"]) == 0

    def test_spe(self) -> None:
        assert run(["verify", "spe", "--cutoff", "8", "--samples", "5", "--seed", "2"]) == 0

    def test_injectivity(self) -> None:
        assert run(["verify", "injectivity", "--n", "3", "--radius", "2"]) == 0

    def test_lemma23(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "lemma23", "--ball", "6"]) == 0
        lines = _out(capsys)
        assert len(lines) == 4
        assert lines[0] == "PASS lemma23.identity id -> x1 -> x1; x2 -> x2"

    def test_lemma23_small_ball_fails(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "lemma23", "--ball", "1"]) == 1
        assert _out(capsys) == [
            "FAIL lemma23.swap no preimage within length 1",
            "FAIL lemma23.invert no preimage within length 1",
            "FAIL lemma23.nielsen no preimage within length 1",
        ]

    def test_bad_argument_is_usage_error(self) -> None:
        assert run(["verify", "prop34", "--n", "2"]) == 2


class TestCertificates:
    def test_certify_and_check(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = tmp_path / "cert.json"
        assert run(["certify", "helly", "--n", "4", "--d", "1", "--out", str(path)]) == 0
        assert _out(capsys) == [f"PASS helly.n=4.d=1 6 subsets written to {path}"]
        assert run(["check", "helly", str(path)]) == 0
        lines = _out(capsys)
        assert lines[0].startswith("PASS helly.n=4.d=1.bound")
        assert all(line.startswith("PASS") for line in lines)

    def test_certify_to_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["certify", "helly", "--n", "4", "--d", "1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 4
        assert len(doc["subsets"]) == 6

    def test_meta(self, tmp_path: Path) -> None:
        path = tmp_path / "cert.json"
        args = ["certify", "helly", "--n", "4", "--d", "1", "--out", str(path), "--meta"]
        assert run(args) == 0
        meta = json.loads(path.read_text())["meta"]
        assert set(meta) == {"python", "platform", "version"}

    def test_certify_failure(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["certify", "helly", "--n", "4", "--d", "2"]) == 1
        lines = _out(capsys)
        assert len(lines) == 2
        assert lines[0].startswith("FAIL helly.k=1.{sigma(1,2),alpha(1,2)} FiniteClosure: ")

    def test_certify_failure_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["certify", "helly", "--n", "4", "--d", "2", "--json"]) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 4
        assert payload["unhandled"][1]["members"] == ["sigma(1,2)", "alpha(1,2)", "alpha(2,3)"]

    def test_check_tampered(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = tmp_path / "cert.json"
        run(["certify", "helly", "--n", "4", "--d", "1", "--out", str(path)])
        doc = json.loads(path.read_text())
        doc["subsets"].pop()
        path.write_text(json.dumps(doc))
        capsys.readouterr()
        assert run(["check", "helly", str(path)]) == 1
        assert any(line.startswith("FAIL helly.n=4.d=1.complete") for line in _out(capsys))

    def test_check_missing_file(self, tmp_path: Path) -> None:
        assert run(["check", "helly", str(tmp_path / "absent.json")]) == 2

    def test_invalid_setting(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("CLOSURE_CAP", "lots")
        assert run(["verify", "floor"]) == 2

"""Command-line front end.

Exit codes: 0 when the computation succeeded or every check passed, 1 when a
verification failed, 2 on usage or parse errors. Results go to stdout (one
``PASS|FAIL <check-id> <detail>`` line per check for suites); logs go to
stderr.
"""

from __future__ import annotations

import argparse
import logging
import platform
import sys
import uuid
from collections.abc import Callable, Sequence
from importlib import metadata
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from coxaut.application import VerificationReport
from coxaut.application.use_cases import (
    enumerate_closure,
    floor_inequality_scan,
    iota_injectivity_check,
    lemma23_surjectivity_search,
    prop34_check,
    spe_w2_check,
    theorem_d_check,
    verify_conjugation_relations,
    verify_diagram_relations,
)
from coxaut.domain import (
    CapExceeded,
    CoxAut,
    CoxEndo,
    DomainError,
    ExceedsCutoff,
    FailureReport,
    Finite,
    Infinite,
    NotFound,
    ValidationError,
    abelianization_matrix,
    abelianize,
    apply,
    compose,
    cox_mul,
    finite_order_exact,
    induced_on_W2,
    iota,
    is_special,
    order_with_cutoff,
    preserves_kernel,
    project_to_W2,
    spe_quotient_perm,
)
from coxaut.infrastructure.config import Settings, load_settings
from coxaut.infrastructure.container import build_certify_use_case
from coxaut.infrastructure.logging import configure_logging, set_run_id
from coxaut.interface.cli.codecs import (
    format_aut,
    format_free_endo,
    format_matrix,
    format_permutation,
    format_vector,
    format_word,
    parse_aut,
    parse_free_word,
    parse_matrix,
    parse_word,
    require_aut,
)
from coxaut.interface.cli.schemas import FailureOutput, ReportOutput, ValueOutput

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

PACKAGE_NAME = "universal-coxeter-toolkit"

Handler = Callable[[argparse.Namespace, Settings], int]


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------
def _print_model(model: BaseModel) -> None:
    print(model.model_dump_json(indent=2))


def _emit_value(args: argparse.Namespace, result: str, **details: Any) -> int:
    if args.json:
        _print_model(ValueOutput(command=args.command, result=result, details=details))
    else:
        print(result)
    return EXIT_OK


def _emit_report(args: argparse.Namespace, report: VerificationReport) -> int:
    if args.json:
        _print_model(ReportOutput.from_report(report))
    else:
        for line in report.lines():
            print(line)
    return EXIT_OK if report.passed else EXIT_FAILED


def _strict(args: argparse.Namespace, settings: Settings) -> bool:
    return bool(args.strict) or settings.strict_parsing


def _as_endo(f: CoxAut | CoxEndo) -> CoxEndo:
    return f.forward if isinstance(f, CoxAut) else f


def _describe_order(order: Finite | Infinite | ExceedsCutoff) -> str:
    if isinstance(order, Finite):
        return f"order {order.order}"
    if isinstance(order, Infinite):
        return "infinite"
    return f"order > {order.cutoff}"


def _environment() -> dict[str, str]:
    try:
        version = metadata.version(PACKAGE_NAME)
    except metadata.PackageNotFoundError:
        version = "unknown"
    return {
        "python": platform.python_version(),
        "platform": platform.platform(),
        "version": version,
    }


# ---------------------------------------------------------------------------
# Computation commands
# ---------------------------------------------------------------------------
def _cmd_reduce(args: argparse.Namespace, settings: Settings) -> int:
    w = parse_word(args.word, args.n, strict=_strict(args, settings))
    return _emit_value(args, format_word(w))


def _cmd_mul(args: argparse.Namespace, settings: Settings) -> int:
    strict = _strict(args, settings)
    u = parse_word(args.u, args.n, strict=strict)
    v = parse_word(args.v, args.n, strict=strict)
    return _emit_value(args, format_word(cox_mul(u, v)))


def _cmd_apply(args: argparse.Namespace, settings: Settings) -> int:
    strict = _strict(args, settings)
    f = parse_aut(args.aut, args.n, strict=strict)
    w = parse_word(args.word, args.n, strict=strict)
    return _emit_value(args, format_word(apply(f, w)))


def _cmd_compose(args: argparse.Namespace, settings: Settings) -> int:
    strict = _strict(args, settings)
    f = parse_aut(args.f, args.n, strict=strict)
    g = parse_aut(args.g, args.n, strict=strict)
    if isinstance(f, CoxAut) and isinstance(g, CoxAut):
        return _emit_value(args, format_aut(compose(f, g)), witness=True)
    return _emit_value(args, format_aut(compose(_as_endo(f), _as_endo(g))), witness=False)


def _cmd_order(args: argparse.Namespace, settings: Settings) -> int:
    f = parse_aut(args.aut, args.n, strict=_strict(args, settings))
    cutoff = args.cutoff if args.cutoff is not None else settings.order_cutoff
    order = order_with_cutoff(f, cutoff)
    text = _describe_order(order)
    details: dict[str, Any] = {}
    if isinstance(order, ExceedsCutoff) and isinstance(f, CoxAut) and preserves_kernel(f):
        matrix_order = finite_order_exact(abelianization_matrix(iota(f)))
        if isinstance(matrix_order, Infinite):
            text = "infinite (matrix certificate)"
        details["matrix"] = _describe_order(matrix_order)
    return _emit_value(args, text, **details)


def _cmd_embed(args: argparse.Namespace, settings: Settings) -> int:
    f = parse_aut(args.aut, args.n, strict=_strict(args, settings))
    image = iota(f)
    if args.matrix:
        matrix = abelianization_matrix(image)
        return _emit_value(args, f"{format_free_endo(image)}\n{format_matrix(matrix)}")
    return _emit_value(args, format_free_endo(image))


def _cmd_abelianize(args: argparse.Namespace, settings: Settings) -> int:
    w = parse_free_word(args.word, args.rank, strict=_strict(args, settings))
    return _emit_value(args, format_vector(abelianize(w)))


def _cmd_matrix_order(args: argparse.Namespace, settings: Settings) -> int:
    return _emit_value(args, _describe_order(finite_order_exact(parse_matrix(args.matrix))))


def _cmd_special(args: argparse.Namespace, settings: Settings) -> int:
    f = parse_aut(args.aut, args.n, strict=_strict(args, settings))
    classes = format_permutation(spe_quotient_perm(f))
    text = "special" if is_special(f) else "not special"
    return _emit_value(args, f"{text}; classes {classes}", classes=classes)


def _cmd_project(args: argparse.Namespace, settings: Settings) -> int:
    strict = _strict(args, settings)
    if args.induced:
        return _emit_value(args, format_aut(induced_on_W2(require_aut(args.value, args.n))))
    w = parse_word(args.value, args.n, strict=strict)
    return _emit_value(args, format_word(project_to_W2(w)))


def _cmd_closure(args: argparse.Namespace, settings: Settings) -> int:
    cap = args.cap if args.cap is not None else settings.closure_cap
    generators = [require_aut(text, args.n) for text in args.generators]
    result = enumerate_closure(generators, cap)
    if isinstance(result, CapExceeded):
        _emit_value(args, f"closure exceeds cap {result.cap}", cap=result.cap, exceeded=True)
        return EXIT_FAILED
    return _emit_value(args, f"order {result.order}", order=result.order)


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------
def _cmd_verify_relations(args: argparse.Namespace, settings: Settings) -> int:
    return _emit_report(args, verify_conjugation_relations(args.n))


def _cmd_verify_figure1(args: argparse.Namespace, settings: Settings) -> int:
    cutoff = args.cutoff if args.cutoff is not None else settings.order_cutoff
    cap = args.cap if args.cap is not None else settings.closure_cap
    return _emit_report(args, verify_diagram_relations(args.n, cutoff, cap=cap))


def _cmd_verify_prop34(args: argparse.Namespace, settings: Settings) -> int:
    return _emit_report(args, prop34_check(args.n, args.ball))


def _cmd_verify_theorem_d(args: argparse.Namespace, settings: Settings) -> int:
    return _emit_report(args, theorem_d_check(args.n, cap=settings.closure_cap))


def _cmd_verify_spe(args: argparse.Namespace, settings: Settings) -> int:
    cutoff = args.cutoff if args.cutoff is not None else settings.spe_cutoff
    samples = args.samples if args.samples is not None else settings.sample_size
    seed = args.seed if args.seed is not None else settings.random_seed
    return _emit_report(args, spe_w2_check(cutoff, sample_size=samples, seed=seed))


def _cmd_verify_lemma23(args: argparse.Namespace, settings: Settings) -> int:
    report = VerificationReport("lemma23")
    result = lemma23_surjectivity_search(args.ball)
    if isinstance(result, NotFound):
        for name in result.missing:
            report.add(f"lemma23.{name}", False, f"no preimage within length {result.radius}")
    else:
        for witness in result:
            word = " ".join(tag.label for tag in witness.word) or "id"
            target = format_free_endo(witness.target, sep="; ")
            report.add(f"lemma23.{witness.name}", True, f"{word} -> {target}")
    return _emit_report(args, report)


def _cmd_verify_injectivity(args: argparse.Namespace, settings: Settings) -> int:
    return _emit_report(args, iota_injectivity_check(args.n, args.radius))


def _cmd_verify_floor(args: argparse.Namespace, settings: Settings) -> int:
    return _emit_report(args, floor_inequality_scan(args.max_n))


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------
def _cmd_certify_helly(args: argparse.Namespace, settings: Settings) -> int:
    use_case = build_certify_use_case(settings)
    out = Path(args.out) if args.out else None
    meta = _environment() if args.meta else None
    result = use_case.execute(args.n, args.d, cap=args.cap, out=out, meta=meta)
    if isinstance(result, FailureReport):
        if args.json:
            _print_model(FailureOutput.from_failure(result))
        else:
            for item in result.unhandled:
                members = "{" + ",".join(tag.label for tag in item.members) + "}"
                reasons = "; ".join(f"{f.handler}: {f.reason}" for f in item.failures)
                print(f"FAIL helly.k={item.k}.{members} {reasons}")
        return EXIT_FAILED
    if out is None:
        print(use_case.render(result))
    elif args.json:
        _print_model(
            ValueOutput(
                command=args.command,
                result=str(out),
                details={"n": result.n, "d": result.d, "subsets": len(result.records)},
            )
        )
    else:
        count = len(result.records)
        print(f"PASS helly.n={result.n}.d={result.d} {count} subsets written to {out}")
    return EXIT_OK


def _cmd_check_helly(args: argparse.Namespace, settings: Settings) -> int:
    use_case = build_certify_use_case(settings)
    return _emit_report(args, use_case.check(Path(args.file)))


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with every subcommand attached."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Structured JSON output")
    common.add_argument(
        "--strict", action="store_true", help="Reject unreduced words instead of reducing them"
    )

    parser = argparse.ArgumentParser(
        prog="coxaut",
        description="Exact computations in W_n, Aut(W_n) and Aut(F_{n-1}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(
        parent: Any, name: str, handler: Handler, help_text: str, rank: bool = True
    ) -> argparse.ArgumentParser:
        p: argparse.ArgumentParser = parent.add_parser(name, parents=[common], help=help_text)
        if rank:
            p.add_argument("--n", type=int, required=True, help="Rank of W_n")
        p.set_defaults(handler=handler)
        return p

    p = command(sub, "reduce", _cmd_reduce, "Reduce a word in W_n")
    p.add_argument("word")
    p = command(sub, "mul", _cmd_mul, "Multiply two words")
    p.add_argument("u")
    p.add_argument("v")
    p = command(sub, "apply", _cmd_apply, "Apply an automorphism to a word")
    p.add_argument("aut")
    p.add_argument("word")
    p = command(sub, "compose", _cmd_compose, "Compose two automorphisms (right one first)")
    p.add_argument("f")
    p.add_argument("g")
    p = command(sub, "order", _cmd_order, "Order of an automorphism up to a cutoff")
    p.add_argument("aut")
    p.add_argument("--cutoff", type=int, default=None)
    p = command(sub, "embed", _cmd_embed, "Image under iota in Aut(F_{n-1})")
    p.add_argument("aut")
    p.add_argument("--matrix", action="store_true", help="Also print the abelianized matrix")
    p = command(sub, "abelianize", _cmd_abelianize, "Exponent sums of a free word", rank=False)
    p.add_argument("--rank", type=int, required=True, help="Rank of F_m")
    p.add_argument("word")
    p = command(sub, "matrix-order", _cmd_matrix_order, "Exact order in GL(Z)", rank=False)
    p.add_argument("matrix", help="Rows separated by ';', e.g. '-1 2; 0 1'")
    p = command(sub, "special", _cmd_special, "Whether an automorphism is special")
    p.add_argument("aut")
    p = command(sub, "project", _cmd_project, "Project a word (or automorphism) to W_2")
    p.add_argument("value")
    p.add_argument("--induced", action="store_true", help="Treat VALUE as an automorphism")
    p = command(sub, "closure", _cmd_closure, "Order of the subgroup generated by products")
    p.add_argument("generators", nargs="+")
    p.add_argument("--cap", type=int, default=None)

    verify = sub.add_parser("verify", help="Run a verification suite")
    suites = verify.add_subparsers(dest="suite", required=True)
    p = command(suites, "relations", _cmd_verify_relations, "Conjugation relations")
    p = command(suites, "figure1", _cmd_verify_figure1, "Coxeter diagram of Y")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p = command(suites, "prop34", _cmd_verify_prop34, "Free subgroup of rank 2")
    p.add_argument("--ball", type=int, default=8)
    p = command(suites, "theorem-d", _cmd_verify_theorem_d, "Finite quotient inputs")
    p = command(suites, "spe", _cmd_verify_spe, "Special automorphisms of W_2", rank=False)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p = command(suites, "lemma23", _cmd_verify_lemma23, "Nielsen preimages at n=3", rank=False)
    p.add_argument("--ball", type=int, default=6)
    p = command(suites, "injectivity", _cmd_verify_injectivity, "iota on a ball in Y")
    p.add_argument("--radius", type=int, default=4)
    p = command(suites, "floor", _cmd_verify_floor, "Floor inequality scan", rank=False)
    p.add_argument("--max-n", type=int, default=64)

    certify = sub.add_parser("certify", help="Generate a certificate")
    kinds = certify.add_subparsers(dest="kind", required=True)
    p = command(kinds, "helly", _cmd_certify_helly, "Fixed-point induction certificate")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--out", default=None, help="Write the certificate to this file")
    p.add_argument("--meta", action="store_true", help="Record environment information")

    check = sub.add_parser("check", help="Re-validate a certificate file")
    kinds = check.add_subparsers(dest="kind", required=True)
    p = command(kinds, "helly", _cmd_check_helly, "Re-check a fixed-point certificate", rank=False)
    p.add_argument("file")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch, and return the exit status."""
    try:
        settings = load_settings()
    except ValueError as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings.log_level, settings.log_format)
    set_run_id(uuid.uuid4().hex)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logger.debug("dispatching %s", args.command)
    try:
        return int(args.handler(args, settings))
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        logger.exception("command %s failed", args.command)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED

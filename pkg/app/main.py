# app/main.py

"""
Command line front end.

    python -m app degree 3,1 [--inner 1] [--oracle]
    python -m app char 2,1 3
    python -m app verify {cz|jt|rclass|stablepoly|induced|classes} [ranges]
    python -m app charpoly --lambda 1 --nu 2
    python -m app bench --family stable --lambda 2,1 --nu 2,2 --n 20..40

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain or guard error.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from app.algebra import iter_coefficients
from app.combinatorics import CycleType, Partition, SkewShape
from app.config import LOG_LEVELS, CliConfig, get_settings
from app.exceptions import ParseError, StableCharError
from app.models import (
    BenchResult,
    CharPolyResult,
    CharResult,
    DegreeResult,
    VerificationReport,
    to_json,
)
from app.oracle import MAX_FROBENIUS_SIZE, count_syt, frobenius_char_value
from app.services.bench_service import DEGREE_STRATEGIES, STABLE_STRATEGIES, BenchService
from app.services.character_service import CharacterEvaluator, degree_hook, degree_skew
from app.services.stable_character_service import StableCharacterService, StableClassSpec
from app.services.verification_service import VerificationService
from app.utils import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2

SUITES = ("cz", "jt", "rclass", "stablepoly", "induced", "classes")

# (k_max, n_max) defaults per suite
SUITE_DEFAULTS = {
    "cz": (4, 10),
    "jt": (3, 6),
    "rclass": (3, 10),
    "stablepoly": (3, None),
    "induced": (None, 6),
    "classes": (3, 6),
}


def parse_range(text: str) -> List[int]:
    """``20..40`` (inclusive), ``30`` or ``20,25,30``; ``5..4`` is empty."""
    text = str(text).strip()
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ParseError(f"not an integer range: {text!r}")


def _parse_shape(outer: str, inner: Optional[str]) -> SkewShape:
    lam = Partition.parse(outer)
    mu = Partition.parse(inner) if inner is not None else Partition()
    try:
        return SkewShape(lam, mu)
    except StableCharError as e:
        raise ParseError(str(e))


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="json_output", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--oracle", action="store_true", default=argparse.SUPPRESS, help="also run the brute-force oracle")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="parallel workers for sweeps")
    common.add_argument("--cache", choices=["per-call", "shared"], default=argparse.SUPPRESS, help="memo cache policy")
    common.add_argument("--log-level", default=argparse.SUPPRESS, help=", ".join(LOG_LEVELS))
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="stablechar", description="Exact symmetric group character toolkit", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    degree = sub.add_parser("degree", parents=[common], help="f^lambda or f^{lambda/mu}")
    degree.add_argument("partition")
    degree.add_argument("--inner", default=None)

    char = sub.add_parser("char", parents=[common], help="chi^{lambda/mu}(alpha)")
    char.add_argument("partition")
    char.add_argument("cycle_type")
    char.add_argument("--inner", default=None)

    verify = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--k-max", type=int, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--m-max", type=int, default=None)
    verify.add_argument("--r", type=int, action="append", default=None)

    charpoly = sub.add_parser("charpoly", parents=[common], help="stable character polynomial")
    charpoly.add_argument("--lambda", dest="lam", required=True)
    charpoly.add_argument("--nu", default="0")
    charpoly.add_argument("--rect", type=int, default=None)

    bench = sub.add_parser("bench", parents=[common], help="compare evaluation strategies")
    bench.add_argument("--family", choices=["stable", "degree"], required=True)
    bench.add_argument("--lambda", dest="lam", default="0")
    bench.add_argument("--nu", default="0")
    bench.add_argument("--k", type=int, default=3)
    bench.add_argument("--n", dest="n_range", default="")
    bench.add_argument("--strategies", default=None)
    return parser


def _emit(config: CliConfig, model, human_lines: Sequence[str]) -> None:
    if config.json_output:
        print(to_json(model))
    else:
        for line in human_lines:
            print(line)


def cmd_degree(args: argparse.Namespace, config: CliConfig) -> int:
    shape = _parse_shape(args.partition, args.inner)
    value = degree_hook(shape.outer) if shape.is_straight else degree_skew(shape)
    result = DegreeResult(shape=str(shape), value=str(value))
    lines = [str(value)]
    if config.oracle:
        oracle_value = count_syt(shape)
        result = result.model_copy(update={"oracle_value": str(oracle_value), "agrees": oracle_value == value})
        lines.append(f"oracle count_syt: {oracle_value} ({'agrees' if oracle_value == value else 'DISAGREES'})")
    _emit(config, result, lines)
    return EXIT_OK if result.agrees is not False else EXIT_FAILED


def cmd_char(args: argparse.Namespace, config: CliConfig) -> int:
    shape = _parse_shape(args.partition, args.inner)
    alpha = CycleType.parse(args.cycle_type)
    evaluator = CharacterEvaluator.for_policy(config.cache)
    value = evaluator.value(shape, alpha)
    result = CharResult(shape=str(shape), cycle_type=str(alpha), value=str(value))
    lines = [str(value)]
    if config.oracle:
        if shape.is_straight and shape.size <= MAX_FROBENIUS_SIZE:
            oracle_value = frobenius_char_value(shape.outer, alpha)
            result = result.model_copy(update={"oracle_value": str(oracle_value), "agrees": oracle_value == value})
            lines.append(f"oracle frobenius: {oracle_value} ({'agrees' if oracle_value == value else 'DISAGREES'})")
        else:
            logger.warning(f"oracle skipped for {shape}: needs a straight shape with at most {MAX_FROBENIUS_SIZE} cells")
    _emit(config, result, lines)
    return EXIT_OK if result.agrees is not False else EXIT_FAILED


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    default_k, default_n = SUITE_DEFAULTS[args.suite]
    k_max = args.k_max if args.k_max is not None else default_k
    n_max = args.n_max if args.n_max is not None else default_n
    service = VerificationService(threads=config.threads, cache_policy=config.cache)
    if args.suite == "cz":
        report = service.verify_cz(k_max, n_max)
    elif args.suite == "jt":
        report = service.verify_jt(k_max, n_max)
    elif args.suite == "rclass":
        report = service.verify_rclass(k_max, n_max, args.r or (1, 2, 3, 4))
    elif args.suite == "stablepoly":
        report = service.verify_stablepoly(k_max, args.m_max if args.m_max is not None else k_max)
    elif args.suite == "induced":
        report = service.verify_induced(n_max)
    else:
        report = service.verify_classes(k_max, n_max)
    _emit(config, report, _report_lines(report))
    return EXIT_OK if report.ok else EXIT_FAILED


def _report_lines(report: VerificationReport) -> List[str]:
    lines = []
    for record in report.records:
        if record.status == "OK":
            lines.append(f"OK {record.instance}")
        else:
            detail = f"FAIL {record.instance} lhs={record.lhs} rhs={record.rhs}"
            if record.witness:
                detail += f" witness={'; '.join(record.witness)}"
            lines.append(detail)
    summary = report.summary
    lines.append(f"{summary.suite}: {summary.passed}/{summary.total} passed, {summary.failed} failed")
    if summary.first_failure:
        lines.append(f"first failure: {summary.first_failure}")
    return lines


def cmd_charpoly(args: argparse.Namespace, config: CliConfig) -> int:
    lam = Partition.parse(args.lam)
    service = StableCharacterService(CharacterEvaluator.for_policy(config.cache))
    if args.rect is not None:
        poly = service.rect_class_poly(lam, args.rect)
        result = CharPolyResult(
            lam=str(lam), rect=str(args.rect), polynomial=str(poly), coefficients=list(iter_coefficients(poly))
        )
        lines = [str(poly), f"valid for n >= {max(lam.first, 1)} with {args.rect} | n+{lam.size}"]
    else:
        nu = Partition.parse(args.nu)
        stable = service.stable_char_poly(StableClassSpec(lam, nu))
        result = CharPolyResult(
            lam=str(lam),
            nu=str(nu),
            polynomial=str(stable.poly),
            coefficients=list(iter_coefficients(stable.poly)),
            valid_from=str(stable.valid_from),
        )
        lines = [str(stable.poly), f"valid_from: {stable.valid_from}"]
    _emit(config, result, lines)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, config: CliConfig) -> int:
    ns = parse_range(args.n_range)
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()] if args.strategies else None
    service = BenchService()
    if args.family == "stable":
        result = service.run_stable(Partition.parse(args.lam), Partition.parse(args.nu), ns, strategies or STABLE_STRATEGIES)
    else:
        result = service.run_degree(args.k, ns, strategies or DEGREE_STRATEGIES)
    _emit(config, result, _bench_lines(result))
    return EXIT_OK


def _bench_lines(result: BenchResult) -> List[str]:
    lines = [f"{'strategy':<10} {'instances':>10} {'calls':>12} {'seconds':>12}"]
    for row in result.rows:
        lines.append(f"{row.strategy:<10} {row.instances:>10} {row.calls:>12} {row.wall_seconds:>12.6f}")
    return lines


COMMANDS: Dict[str, Callable[[argparse.Namespace, CliConfig], int]] = {
    "degree": cmd_degree,
    "char": cmd_char,
    "verify": cmd_verify,
    "charpoly": cmd_charpoly,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_PARSE

    try:
        settings = get_settings()
        config = CliConfig(
            command=args.command,
            json_output=getattr(args, "json_output", settings.json_output),
            oracle=getattr(args, "oracle", False),
            threads=getattr(args, "threads", settings.threads),
            cache=getattr(args, "cache", settings.cache),
            log_level=getattr(args, "log_level", settings.log_level),
        )
    except ValidationError as e:
        print(f"invalid configuration: {e}", file=sys.stderr)
        return EXIT_PARSE
    setup_logging(config.log_level)

    try:
        return COMMANDS[config.command](args, config)
    except StableCharError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

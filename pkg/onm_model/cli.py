"""
Command-line front end.

    python app.py verify --n 2 --m 3 --depth 3 --checks C1-C5 --format json
    python app.py eval "r[1,2]" --equals "s1 t2'"
    python app.py fourier "S S' T T'" --at "a1 a2^-1 b1 b2^-1"
    python app.py factor "s1 s2'"
    python app.py oracle "p + q" "1" --trials 5
    python app.py notpower --n 1 --m 1
    python app.py reports

Exit codes: 0 success, 1 failure or error, 2 unconfirmed, 64 usage error.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from onm_model.config import DEFAULT_DEPTH, DEFAULT_SEED, DEFAULT_TRIALS, DEFAULT_WORKERS, configure_logging
from onm_model.controller.covariant import check_not_power, factor_into_F
from onm_model.controller.verify import CheckSelectionError, parse_checks, run_verification, store_report
from onm_model.models.context import Context, OnmError
from onm_model.models.elements import Verdict, equals, fourier
from onm_model.models.report import get_report_by_id, get_reports
from onm_model.services.parser import parse_element, parse_groupword
from onm_model.services.permrep import refute_equality

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNCONFIRMED = 2
EXIT_USAGE = 64


class OnmArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> OnmArgumentParser:
    common = OnmArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, default=2)
    common.add_argument("--m", type=_positive, default=2)
    common.add_argument("--depth", type=_positive, default=DEFAULT_DEPTH)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--refine-depth", type=_positive, default=None,
                        help="refinement budget for equality checks (default: longest word + 2)")
    common.add_argument("--log-level", default=None)

    parser = OnmArgumentParser(prog="onm", description="Symbolic engine and verifier for O_{n,m}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run the verification corpus")
    verify.add_argument("--checks", default=None, help="e.g. C1,C5-C7 (default: all)")
    verify.add_argument("--workers", type=_positive, default=DEFAULT_WORKERS)
    verify.add_argument("--store", action="store_true", help="save the report in the archive")

    ev = sub.add_parser("eval", parents=[common], help="normalize an expression")
    ev.add_argument("expr")
    ev.add_argument("--equals", dest="other", default=None)

    fr = sub.add_parser("fourier", parents=[common], help="Fourier coefficient at a group word")
    fr.add_argument("expr")
    fr.add_argument("--at", required=True)

    fa = sub.add_parser("factor", parents=[common], help="factor a p-corner word over F and F*")
    fa.add_argument("word")

    orc = sub.add_parser("oracle", parents=[common], help="try to refute an equality in concrete models")
    orc.add_argument("lhs")
    orc.add_argument("rhs")
    orc.add_argument("--trials", type=_positive, default=DEFAULT_TRIALS)

    sub.add_parser("notpower", parents=[common], help="R is not a power partial isometry")

    rep = sub.add_parser("reports", parents=[common], help="list stored reports")
    rep.add_argument("--id", type=int, default=None, dest="report_id")
    return parser


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _verdict_code(verdict: Verdict) -> int:
    if verdict.is_equal:
        return EXIT_OK
    return EXIT_UNCONFIRMED if verdict.is_unconfirmed else EXIT_FAIL


def cmd_verify(args, ctx: Context) -> int:
    checks = parse_checks(args.checks)
    report = run_verification(ctx, args.depth, checks, args.seed, args.refine_depth, args.workers)
    if args.store:
        from onm_model.db import SessionLocal, init_db

        init_db()
        db = SessionLocal()
        try:
            record = store_report(db, report)
            print(f"stored report {record.id}", file=sys.stderr)
        finally:
            db.close()
    print(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code()


def cmd_eval(args, ctx: Context) -> int:
    x = parse_element(args.expr, ctx)
    if args.other is None:
        _emit(args, {"n": ctx.n, "m": ctx.m, "result": str(x)}, str(x))
        return EXIT_OK
    y = parse_element(args.other, ctx)
    verdict = equals(x, y, depth=args.refine_depth)
    _emit(args, {"n": ctx.n, "m": ctx.m, "result": str(x), "verdict": verdict.kind.value, "detail": str(verdict)},
          f"{x}\n{verdict}")
    return _verdict_code(verdict)


def cmd_fourier(args, ctx: Context) -> int:
    coefficient = fourier(parse_element(args.expr, ctx), parse_groupword(args.at, ctx))
    _emit(args, {"at": args.at, "result": str(coefficient)}, str(coefficient))
    return EXIT_OK


def cmd_factor(args, ctx: Context) -> int:
    x = parse_element(args.word, ctx)
    if len(x.terms) != 1:
        raise OnmError(f"factor expects a single word, got {x}")
    (w, c), = x.terms.items()
    if c != 1:
        raise OnmError(f"factor expects a word with coefficient 1, got {x}")
    factorization = factor_into_F(ctx, w)
    verdict = equals(factorization.to_element(), x, depth=args.refine_depth)
    _emit(args, {"word": str(w), "factors": str(factorization), "product": verdict.kind.value},
          f"{factorization}\nproduct check: {verdict}")
    return _verdict_code(verdict)


def cmd_oracle(args, ctx: Context) -> int:
    result = refute_equality(parse_element(args.lhs, ctx), parse_element(args.rhs, ctx), args.trials, args.seed)
    _emit(args, {"refuted": result.refuted, "model": result.model, "trials": result.trials},
          str(result))
    return EXIT_OK


def cmd_notpower(args, ctx: Context) -> int:
    witness = check_not_power(ctx, args.refine_depth)
    _emit(args, {"n": ctx.n, "m": ctx.m, "degenerate": witness.degenerate, "holds": witness.holds(),
                 "witness": str(witness)}, str(witness))
    return EXIT_OK if witness.holds() else EXIT_FAIL


def cmd_reports(args, ctx: Context) -> int:
    from onm_model.db import SessionLocal, init_db

    init_db()
    db = SessionLocal()
    try:
        if args.report_id is not None:
            record = get_report_by_id(db, args.report_id)
            if record is None:
                raise OnmError(f"no stored report {args.report_id}")
            report = record.to_report()
            print(report.to_json() if args.format == "json" else report.to_text())
            return EXIT_OK
        records = get_reports(db)
        rows = [{"id": r.id, "n": r.n, "m": r.m, "depth": r.depth, "seed": r.seed,
                 "created_at": r.created_at.isoformat() if r.created_at else None,
                 "pass": r.passed, "fail": r.failed, "unconfirmed": r.unconfirmed} for r in records]
        text = "\n".join(f"{r['id']:>4}  n={r['n']} m={r['m']} depth={r['depth']} seed={r['seed']}  "
                         f"pass={r['pass']} fail={r['fail']} unconfirmed={r['unconfirmed']}" for r in rows)
        _emit(args, {"reports": rows}, text or "no stored reports")
        return EXIT_OK
    finally:
        db.close()


COMMANDS = {
    "verify": cmd_verify,
    "eval": cmd_eval,
    "fourier": cmd_fourier,
    "factor": cmd_factor,
    "oracle": cmd_oracle,
    "notpower": cmd_notpower,
    "reports": cmd_reports,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level.upper() if args.log_level else None)
    try:
        ctx = Context(args.n, args.m)
        return COMMANDS[args.command](args, ctx)
    except CheckSelectionError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OnmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL

"""Command-line front end.

    ellint eval <fn> <a> [<r>]          fn in ellk, elle, rho (two args) or
                                        ramanujan, xi, eta (one arg x)
    ellint bounds <a> <r_min> <r_max> <n>
    ellint verify [--level quick|full]
    ellint sharpness <a> <epsilon>

Every subcommand takes ``--format plain|csv|json``. The CLI only formats
library results; it does no arithmetic of its own.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

import numpy as np

from . import bounds, elliptic, ramanujan, verify
from .errors import ConvergenceError, DomainError, WitnessNotFound
from .special_core import EvalConfig

FORMATS = ("plain", "csv", "json")

TWO_ARG: dict[str, Callable[..., float]] = {
    "ellk": elliptic.ellk_gen,
    "elle": elliptic.elle_gen,
    "rho": bounds.ratio_rho,
}
ONE_ARG: dict[str, Callable[[float], float]] = {
    "ramanujan": ramanujan.r_def,
    "xi": ramanujan.xi,
    "eta": ramanujan.eta,
}


def fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render(records: list[dict], kind: str, out) -> None:
    if not records:
        return
    if kind == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif kind == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(records[0].keys())
        for rec in records:
            writer.writerow(fmt(v) for v in rec.values())
        out.write(buf.getvalue())
    else:
        for rec in records:
            out.write("  ".join(f"{k}={fmt(v)}" for k, v in rec.items()) + "\n")


def cmd_eval(args, cfg: EvalConfig, out) -> int:
    if args.fn in ONE_ARG:
        if args.arg is not None:
            raise DomainError(f"{args.fn} takes a single argument x")
        value = ONE_ARG[args.fn](args.a)
        rec = {"fn": args.fn, "x": args.a, "value": value}
    else:
        if args.arg is None:
            raise DomainError(f"{args.fn} needs two arguments: a r")
        if not 0.0 < args.arg < 1.0:
            raise DomainError(f"modulus r must lie in (0, 1), got {args.arg!r}")
        value = TWO_ARG[args.fn](args.a, args.arg, cfg)
        rec = {"fn": args.fn, "a": args.a, "r": args.arg, "value": value}
    if args.format == "plain":
        out.write(fmt(value) + "\n")
    else:
        render([rec], args.format, out)
    return 0


def cmd_bounds(args, cfg: EvalConfig, out) -> int:
    if args.n < 1:
        raise DomainError(f"n must be >= 1, got {args.n}")
    if not 0.0 < args.r_min <= args.r_max < 1.0:
        raise DomainError(
            f"need 0 < r_min <= r_max < 1, got r_min={args.r_min!r}, r_max={args.r_max!r}"
        )
    if args.n > 1 and args.r_min == args.r_max:
        raise DomainError("r_min must be < r_max when n > 1")
    rows = bounds.envelope_scan([args.a], np.linspace(args.r_min, args.r_max, args.n), cfg)
    records = [rep.as_dict() for rep in rows]
    render(records, args.format, out)
    summary = {
        "min_lower_margin": min(r["lower_margin"] for r in records),
        "min_upper_margin": min(r["upper_margin"] for r in records),
    }
    if args.format == "json":
        out.write(json.dumps(summary) + "\n")
    else:
        out.write("# " + "  ".join(f"{k}={fmt(v)}" for k, v in summary.items()) + "\n")
    return 0


def cmd_verify(args, cfg: EvalConfig, out) -> int:
    results = []
    for name in verify.CHECKS:
        res = verify.run_check(name, args.level)
        results.append(res)
        if args.format == "plain":
            out.write(res.line() + "\n")
            out.flush()
    if args.format != "plain":
        render(
            [
                {
                    "check": r.name,
                    "passed": r.passed,
                    "seconds": r.seconds,
                    "detail": r.detail,
                    "worst": json.dumps(r.worst) if args.format == "csv" else r.worst,
                }
                for r in results
            ],
            args.format,
            out,
        )
    failed = [r for r in results if not r.passed]
    if args.format == "plain":
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return 1 if failed else 0


def cmd_sharpness(args, cfg: EvalConfig, out) -> int:
    c = bounds.sharp_constants(args.a)
    gap = c.beta0 - c.alpha0
    if not 0.0 < args.epsilon < gap:
        raise DomainError(
            f"epsilon must lie in (0, beta0 - alpha0) = (0, {gap:.6g}), got {args.epsilon!r}"
        )
    witnesses = [
        bounds.sharpness_scan(args.a, c.alpha0 + args.epsilon, "lower", cfg),
        bounds.sharpness_scan(args.a, c.beta0 - args.epsilon, "upper", cfg),
    ]
    render([w.as_dict() for w in witnesses], args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellint",
        description="Generalized elliptic integrals and their sharp logarithmic bounds.",
    )
    fmt_opt = argparse.ArgumentParser(add_help=False)
    fmt_opt.add_argument("--format", choices=FORMATS, default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[fmt_opt], help="evaluate one function")
    p.add_argument("fn", choices=sorted(TWO_ARG) + sorted(ONE_ARG))
    p.add_argument("a", type=float, help="parameter a (or x for one-argument functions)")
    p.add_argument("arg", type=float, nargs="?", help="modulus r")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bounds", parents=[fmt_opt], help="envelope table over r")
    p.add_argument("a", type=float)
    p.add_argument("r_min", type=float)
    p.add_argument("r_max", type=float)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[fmt_opt], help="run the verification catalogue")
    p.add_argument("--level", choices=("quick", "full"), default="full")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sharpness", parents=[fmt_opt], help="witnesses that alpha0, beta0 are sharp")
    p.add_argument("a", type=float)
    p.add_argument("epsilon", type=float)
    p.set_defaults(func=cmd_sharpness)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        cfg = EvalConfig.from_env()
        return args.func(args, cfg, out)
    except (DomainError, ConvergenceError, WitnessNotFound) as exc:
        print(f"ellint {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

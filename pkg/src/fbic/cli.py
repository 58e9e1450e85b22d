"""Command-line interface: ``fbic <subcommand> [flags]``.

Exit codes: 0 success, 1 invalid or infeasible parameters, 2 usage errors,
3 unsupported regime or undefined quantity.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import sweep
from .det import DetParams, scheme_rate, simulate, feedback_rate
from .errors import FbicError, NotWellDefined, UnsupportedRegime
from .gauss import (
    GaussParams,
    MuAlloc,
    SearchSpec,
    achievable_rate,
    bounds_report,
    gdof_lower,
    optimize_mu,
    parse_cfb,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in an unsigned 64-bit integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _cfb(text: str):
    try:
        return parse_cfb(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv_of(conv):
    def parse(text: str):
        try:
            return [conv(part) for part in text.split(",") if part.strip()]
        except (ValueError, ArithmeticError) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    return parse


def _axis(text: str) -> sweep.Axis:
    try:
        return sweep.Axis.parse(text)
    except (ValueError, FbicError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _beta(text: str):
    try:
        return sweep.parse_beta(text)
    except (ValueError, ArithmeticError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="write results here instead of stdout")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text/CSV")
    common.add_argument("--seed", type=_u64, default=0, help="random seed (default 0)")

    parser = argparse.ArgumentParser(
        prog="fbic",
        description="K-user symmetric interference channels with rate-limited feedback.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def det_flags(p):
        p.add_argument("--n", type=_nonneg_int, required=True, help="direct-link levels")
        p.add_argument("--m", type=_nonneg_int, required=True, help="cross-link levels")
        p.add_argument("--p2", type=_nonneg_int, required=True, help="twice the feedback levels per use")
        p.add_argument("--k", type=int, required=True, help="number of users")

    p = sub.add_parser("det-rate", parents=[common], help="exact symmetric rate of the deterministic model")
    det_flags(p)

    p = sub.add_parser("det-sim", parents=[common], help="simulate the two-slot deterministic scheme")
    det_flags(p)
    p.add_argument("--blocks", type=_nonneg_int, required=True)

    p = sub.add_parser("gauss-rate", parents=[common], help="achievable rate and bounds for one Gaussian channel")
    p.add_argument("--snr-db", type=float, required=True)
    p.add_argument("--inr-db", type=float, required=True)
    p.add_argument("--cfb", type=_cfb, required=True, help="feedback capacity in bits/use, or inf")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu", type=_csv_of(float), default=None, help="comma-separated power weights")
    p.add_argument("--optimize", action="store_true", help="search for a better power split")
    p.add_argument("--refined", action="store_true", help="use log(1+x) for layers decoded without lattice sums")

    p = sub.add_parser("gauss-sweep", parents=[common], help="rate and bound against SNR")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cfb-list", type=_csv_of(parse_cfb), required=True)
    p.add_argument("--snr-db-range", type=_axis, required=True, metavar="START:STOP:STEPS")

    p = sub.add_parser("det-sweep", parents=[common], help="normalized deterministic rate against alpha")
    p.add_argument("--beta-list", type=_csv_of(sweep.parse_beta), required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("gdof", parents=[common], help="GDoF lower bound")
    p.add_argument("--alpha", type=_beta, required=True)
    p.add_argument("--beta", type=_beta, required=True)

    p = sub.add_parser("gap-audit", parents=[common], help="check the gap certificate on a grid")
    p.add_argument("--k-list", type=_csv_of(int), required=True)
    p.add_argument("--cfb-list", type=_csv_of(parse_cfb), required=True)
    p.add_argument("--snr-db-range", type=_axis, required=True, metavar="START:STOP:STEPS")

    for name in ("gauss-sweep", "det-sweep", "gap-audit"):
        sub.choices[name].set_defaults(out_required=True)
    return parser


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _num(x) -> str:
    return sweep.format_value(x)


def _cmd_det_rate(args, out):
    params = DetParams(args.n, args.m, args.p2, args.k)
    rate = feedback_rate(params)
    if args.json:
        json.dump({"n": args.n, "m": args.m, "p2": args.p2, "k": args.k, "regime": params.regime().value,
                   "rate": sweep.format_fraction(rate), "rate_float": float(rate)}, out)
        out.write("\n")
    else:
        out.write(f"{rate} = {_num(rate)}\n")


def _cmd_det_sim(args, out):
    params = DetParams(args.n, args.m, args.p2, args.k)
    ok, blocks = simulate(params, args.blocks, seed=args.seed)
    rate = scheme_rate(params)
    if args.json:
        json.dump({"decoded": ok, "blocks": blocks, "rate": sweep.format_fraction(rate), "seed": args.seed}, out)
        out.write("\n")
    else:
        out.write(f"{ok}/{blocks} blocks decoded, rate {rate}\n")


def _cmd_gauss_rate(args, out):
    params = GaussParams.from_db(args.snr_db, args.inr_db, args.cfb, args.k)
    regime = params.regime()
    breakdown = None
    mu = None
    if args.optimize or args.mu is not None:
        if not regime.has_scheme:
            raise UnsupportedRegime(f"no achievable scheme for alpha={params.alpha:.6g} ({regime.value})")
        if args.optimize:
            mu, breakdown = optimize_mu(params, search=SearchSpec(refined=args.refined))
        else:
            mu = MuAlloc(regime, args.mu)
    if regime.has_scheme and breakdown is None:
        report = bounds_report(params, mu, refined=args.refined)
        breakdown = achievable_rate(params, report.mu, args.refined)
    else:
        report = bounds_report(params, mu, refined=args.refined)
    fields = {
        "regime": regime.value,
        "alpha": params.alpha,
        "branch": report.branch.value,
        "mu": list(report.mu.mu) if report.mu else None,
        "per_message": list(breakdown.per_message) if breakdown else None,
        "binding": list(breakdown.binding_constraint) if breakdown else None,
        "rate": breakdown.r_sym if breakdown else None,
        "ub_no_fb": report.ub_no_fb,
        "ub_inf_fb": report.ub_inf_fb,
        "ub": report.ub_conjectured,
        "gap": (report.ub_conjectured - breakdown.r_sym) if breakdown else None,
        "regime_const": report.regime_gap_const,
        "L": report.global_gap_L,
    }
    if args.json:
        json.dump(fields, out)
        out.write("\n")
        return
    for key, value in fields.items():
        if isinstance(value, list):
            text = ",".join(_num(v) for v in value)
        else:
            text = _num(value)
        out.write(f"{key}: {text}\n")


def _emit_rows(rows, args, out):
    if args.json:
        sweep.write_json(rows, out)
    else:
        sweep.write_csv(rows, out)


def _cmd_gauss_sweep(args, out):
    rows = sweep.sweep_gauss_snr(args.alpha, args.k, args.cfb_list, args.snr_db_range.values())
    _emit_rows(rows, args, out)


def _cmd_det_sweep(args, out):
    rows = sweep.sweep_det_alpha(args.beta_list, k_users=args.k)
    _emit_rows(rows, args, out)


def _cmd_gdof(args, out):
    value = gdof_lower(args.alpha, args.beta)
    if args.json:
        json.dump({"alpha": _num(args.alpha), "beta": _num(args.beta), "gdof": _num(value)}, out)
        out.write("\n")
    else:
        out.write(f"{_num(value)}\n")


def _cmd_gap_audit(args, out):
    rows, summary = sweep.gap_audit(
        snr_db_values=args.snr_db_range.values(), cfb_list=args.cfb_list, k_list=args.k_list
    )
    _emit_rows(rows, args, out)
    json.dump(summary.to_dict(), sys.stdout)
    sys.stdout.write("\n")


COMMANDS = {
    "det-rate": _cmd_det_rate,
    "det-sim": _cmd_det_sim,
    "gauss-rate": _cmd_gauss_rate,
    "gauss-sweep": _cmd_gauss_sweep,
    "det-sweep": _cmd_det_sweep,
    "gdof": _cmd_gdof,
    "gap-audit": _cmd_gap_audit,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "out_required", False) and not args.out:
        parser.print_usage(sys.stderr)
        print(f"fbic {args.command}: error: --out is required", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "gauss-rate" and args.optimize and args.mu is not None:
        print("fbic gauss-rate: error: --mu and --optimize are mutually exclusive", file=sys.stderr)
        return EXIT_USAGE
    try:
        with _output(args.out) as out:
            COMMANDS[args.command](args, out)
    except NotWellDefined as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNSUPPORTED
    except UnsupportedRegime as exc:
        print(f"unsupported regime: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except FbicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

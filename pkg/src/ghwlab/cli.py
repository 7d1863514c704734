"""Command-line interface: ``ghwlab {analyze,field,periods,omega,verify}``.

Exit codes: 0 ok, 2 method disagreement or failed check, 3 infeasible
request, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis
from .analysis import EXIT_DISAGREE, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, AnalysisConfig
from .charsums import (
    gaussian_period_bf,
    gaussian_period_closed_N2,
    omega_bf,
    omega_closed,
    omega_params,
)
from .cyclo import quad_to_cyc
from .errors import FieldTooLarge, GhwLabError, TooLarge
from .ghw import METHODS
from .gf import build_field


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _methods(text: str) -> tuple[str, ...]:
    items = tuple(x.strip() for x in text.split(",") if x.strip())
    bad = [x for x in items if x not in METHODS]
    if not items or bad:
        raise argparse.ArgumentTypeError(f"methods must be a comma list from {','.join(METHODS)}")
    return items


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ghwlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_args(sp):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--m", type=int, required=True, help="extension degree")

    a = sub.add_parser("analyze", help="length, dimension, weights and weight hierarchy of C_D")
    field_args(a)
    a.add_argument("--d-mode", choices=("one", "special"), required=True)
    a.add_argument("--methods", type=_methods, default=METHODS, help="comma list (default: all four)")
    a.add_argument("--r-max", type=_positive)
    a.add_argument("--format", choices=("table", "json", "csv"), default="table")
    a.add_argument("--threads", type=_positive, default=1)
    a.add_argument("--ceiling", type=_positive, help="feasibility ceiling (default $GHWLAB_CEILING or 1e7)")
    a.add_argument("--timing", action="store_true", help="include wall time (output no longer byte-stable)")

    f = sub.add_parser("field", help="modulus, primitive element and trace histogram")
    field_args(f)
    f.add_argument("--histogram", action="store_true", help="print trace-fiber counts")

    pe = sub.add_parser("periods", help="Gaussian periods of order N")
    field_args(pe)
    pe.add_argument("--N", type=_positive, required=True)

    o = sub.add_parser("omega", help="Omega(a, b) by brute force and closed form")
    field_args(o)
    o.add_argument("--M", type=int, required=True)
    o.add_argument("--a-log", type=int, required=True, help="a = alpha^a_log")
    o.add_argument("--b-log", type=int, help="b = alpha^b_log (omit for b = 0)")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=("core", "extended"), default="core")
    return parser


def cmd_analyze(args, out) -> int:
    config = AnalysisConfig(
        p=args.p,
        m=args.m,
        d_mode=args.d_mode,
        methods=args.methods,
        r_max=args.r_max,
        format=args.format,
        threads=args.threads,
        feasibility_ceiling=args.ceiling,
        timing=args.timing,
    )
    result = analysis.analyze(config)
    out.write(analysis.render(result))
    return result.exit_code


def cmd_field(args, out) -> int:
    ctx = build_field(args.p, args.m)
    out.write(f"q = {ctx.q}\n")
    out.write(f"modulus (low to high) = {list(ctx.modulus)}\n")
    out.write(f"alpha = {list(ctx.alpha.coeffs)}  ({ctx.alpha})\n")
    if args.histogram:
        counts = np.bincount(ctx.trace_table, minlength=ctx.p)
        out.write("trace fibers: " + " ".join(f"{j}:{c}" for j, c in enumerate(counts.tolist())) + "\n")
    return EXIT_OK


def cmd_periods(args, out) -> int:
    ctx = build_field(args.p, args.m)
    code = EXIT_OK
    for i in range(args.N):
        eta = gaussian_period_bf(ctx, args.N, i)
        line = f"eta_{i} = {eta}  coeffs={list(eta.coeffs)}"
        if args.N == 2:
            closed = gaussian_period_closed_N2(args.p, args.m, i)
            same = quad_to_cyc(args.p, closed) == eta
            line += f"  closed={closed}  {'closed=brute' if same else 'MISMATCH'}"
            if not same:
                code = EXIT_DISAGREE
        out.write(line + "\n")
    return code


def cmd_omega(args, out) -> int:
    ctx = build_field(args.p, args.m)
    params = omega_params(args.p, args.m, args.M)
    a = ctx.alpha_pow(args.a_log)
    b = ctx.zero if args.b_log is None else ctx.alpha_pow(args.b_log)
    bf = omega_bf(ctx, a, b, args.M)
    closed = omega_closed(ctx, params, a, b)
    rendered = closed.to_cyc(ctx)
    out.write(f"params: f={params.f} h={params.h} d={params.d} first_case={params.first_case}\n")
    out.write(f"a = {a}, b = {b}\n")
    out.write(f"brute force: {bf}  coeffs={list(bf.coeffs)}\n")
    spike = f" + {closed.spike_coeff}*z^{closed.spike_exp}" if closed.spike_coeff else ""
    out.write(f"closed form: {closed.period_coeff}*eta_{closed.t}^({params.d}){spike} = {rendered}\n")
    same = rendered == bf
    out.write("equal\n" if same else "MISMATCH\n")
    return EXIT_OK if same else EXIT_DISAGREE


def cmd_verify(args, out) -> int:
    from .verify import format_result, run_suite

    def show(res):
        out.write(format_result(res) + "\n")
        out.flush()

    results = run_suite(args.suite, progress=show)
    failed = [r for r in results if not r.ok]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks ok\n")
    return EXIT_OK if not failed else EXIT_DISAGREE


COMMANDS = {
    "analyze": cmd_analyze,
    "field": cmd_field,
    "periods": cmd_periods,
    "omega": cmd_omega,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (TooLarge, FieldTooLarge) as exc:
        print(f"ghwlab: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (GhwLabError, ValueError) as exc:
        print(f"ghwlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: solve quintics, verify reports, benchmark.

All numbers cross the process boundary as decimal strings in the complex
literal grammar; binary floats never appear in reports.  Exit codes: 0
success, 1 usage/parse error, 2 structured solver or verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from .errors import ParseError, QuinticError
from .mpfield import PrecisionCtx, format_complex, parse_complex
from .oracle import aberth_solve, match_rootsets
from .tschirnhaus import MonicQuintic
from .closedform import RootReport, solve_quintic

__all__ = ["main", "cmd_solve", "cmd_verify", "cmd_bench", "report_to_json"]

_COEFF_FLAGS = ("--m", "--n", "--p", "--q", "--r")


def _default_digits() -> int:
    env = os.environ.get("QUINTIC_DIGITS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 200


def _merge_coefficient_values(argv):
    """Glue '--m -200i' into '--m=-200i' so argparse keeps negative literals."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _COEFF_FLAGS:
            try:
                out.append(tok + "=" + next(it))
            except StopIteration:
                out.append(tok)
        else:
            out.append(tok)
    return out


def _fmt(z, digits):
    return format_complex(z, digits)


def report_to_json(report: RootReport, quintic: MonicQuintic, digits: int, seed: int) -> dict:
    """JSON-ready dict; every numeric value is a decimal-string literal."""
    ctx = report.reduction.ctx
    out_digits = max(10, digits - 15)
    params = report.reduction.params
    diag = {
        "alpha": _fmt(params.alpha, out_digits) if params else None,
        "xi": _fmt(params.xi, out_digits) if params else None,
        "eta": _fmt(params.eta, out_digits) if params else None,
        "d": _fmt(params.d, out_digits) if params else None,
        "A": _fmt(report.reduction.A, out_digits),
        "B": _fmt(report.reduction.B, out_digits),
        "s": _fmt(report.reduction.s, out_digits) if report.reduction.s is not None else None,
        "strategy": report.bring.strategy,
        "shift": _fmt(ctx.convert(report.shift_applied), out_digits),
        "precision_used": report.precision_used,
        "candidate_residuals": [_fmt(v, 10) for v in report.candidate_residuals],
    }
    return {
        "roots": [
            {"re": _fmt(x.real, out_digits), "im": _fmt(x.imag, out_digits)}
            for x in report.roots
        ],
        "residuals": [_fmt(v, 10) for v in report.residuals],
        "diagnostics": diag,
        "input": {
            "m": _fmt(quintic.m, out_digits),
            "n": _fmt(quintic.n, out_digits),
            "p": _fmt(quintic.p, out_digits),
            "q": _fmt(quintic.q, out_digits),
            "r": _fmt(quintic.r, out_digits),
            "digits": digits,
            "seed": seed,
        },
    }


def _render_text(payload: dict) -> str:
    lines = ["quintic roots (truncated to reported precision):"]
    for k, root in enumerate(payload["roots"], start=1):
        im = root["im"]
        sign = "-" if im.startswith("-") else "+"
        lines.append(f"  r{k} = {root['re']} {sign} {im.lstrip('-')}i")
    lines.append("residual magnitudes: " + ", ".join(payload["residuals"]))
    d = payload["diagnostics"]
    lines.append(f"strategy: {d['strategy']}   precision used: {d['precision_used']} digits")
    if d["s"] is not None:
        lines.append(f"bring parameter s = {d['s']}")
    return "\n".join(lines)


def cmd_solve(args) -> int:
    digits = args.digits
    try:
        ctx = PrecisionCtx(digits=digits, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        quintic = MonicQuintic.make(ctx, args.m, args.n, args.p, args.q, args.r)
    except ParseError as exc:
        print(f"error: bad coefficient literal: {exc}", file=sys.stderr)
        return 1
    try:
        report = solve_quintic(quintic, ctx, strategy=args.strategy)
    except QuinticError as exc:
        if args.fallback == "oracle":
            roots = aberth_solve(quintic.as_poly(ctx), ctx)
            payload = {
                "roots": [
                    {"re": _fmt(x.real, digits - 15), "im": _fmt(x.imag, digits - 15)}
                    for x in roots
                ],
                "residuals": [
                    _fmt(abs(quintic.eval(x, ctx)), 10) for x in roots
                ],
                "diagnostics": {"strategy": "oracle_fallback", "closed_form_error": str(exc)},
                "input": {"digits": digits, "seed": args.seed},
            }
            print(json.dumps(payload, indent=2) if args.json else _render_text_fallback(payload))
            return 0
        print(f"error: solver failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    payload = report_to_json(report, quintic, digits, args.seed)
    print(json.dumps(payload, indent=2) if args.json else _render_text(payload))
    return 0


def _render_text_fallback(payload: dict) -> str:
    lines = ["quintic roots (oracle fallback):"]
    for k, root in enumerate(payload["roots"], start=1):
        lines.append(f"  r{k} = {root['re']} + {root['im']}i")
    lines.append("closed form failed: " + payload["diagnostics"]["closed_form_error"])
    return "\n".join(lines)


def cmd_verify(args) -> int:
    try:
        with open(args.report) as handle:
            payload = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read report: {exc}", file=sys.stderr)
        return 1
    try:
        digits = int(payload["input"]["digits"])
        ctx = PrecisionCtx(digits=digits)
        quintic = MonicQuintic.make(
            ctx,
            payload["input"]["m"],
            payload["input"]["n"],
            payload["input"]["p"],
            payload["input"]["q"],
            payload["input"]["r"],
        )
        roots = [
            ctx.mp.mpc(parse_complex(x["re"], ctx).real, parse_complex(x["im"], ctx).real)
            for x in payload["roots"]
        ]
    except (KeyError, TypeError, ParseError) as exc:
        print(f"error: malformed report: {exc!r}", file=sys.stderr)
        return 1

    # the report carries digits - 15 digits; rounding a root of magnitude R
    # moves the residual by about |Q'| * ulp ~ scale * R^5 * 10^-(digits-15)
    scale = quintic.scale(ctx)
    big = max(max(abs(x) for x in roots), ctx.mpf(1))
    tol = ctx.pow10(-(digits - 15) + 5) * scale * big**5
    failures = []
    for k, x in enumerate(roots, start=1):
        res = abs(quintic.eval(x, ctx))
        if res > tol:
            failures.append(f"root r{k} residual {ctx.mp.nstr(res, 5)} exceeds {ctx.mp.nstr(tol, 5)}")
    total = sum(roots, ctx.mp.mpc(0))
    prod = ctx.mp.mpc(1)
    for x in roots:
        prod *= x
    if abs(total + quintic.m) > tol:
        failures.append("Vieta sum check failed")
    if abs(prod + quintic.r) > tol:
        failures.append("Vieta product check failed")
    if failures:
        for f in failures:
            print(f"FAIL: {f}", file=sys.stderr)
        return 2
    print(f"report verified: 5 roots, residuals and Vieta identities hold at {digits - 15} digits")
    return 0


def _random_quintic(rng: random.Random, ctx, magnitude=1000.0):
    def draw():
        return ctx.mpc(rng.uniform(-magnitude, magnitude), rng.uniform(-magnitude, magnitude))

    return MonicQuintic(draw(), draw(), draw(), draw(), draw())


def cmd_bench(args) -> int:
    try:
        digit_list = [int(v) for v in args.digits.split(",")]
        if any(d < 30 for d in digit_list):
            raise ValueError("digits must be >= 30")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rng = random.Random(args.seed)
    rows = ["seed,index,digits,strategy,cf_ms,oracle_ms,match_distance,status"]
    all_ok = True
    for index in range(args.count):
        ctx0 = PrecisionCtx(digits=max(30, min(digit_list)), seed=args.seed)
        quintic = _random_quintic(rng, ctx0)
        for digits in digit_list:
            ctx = PrecisionCtx(digits=digits, seed=args.seed)
            q = quintic.rebind(ctx)
            t0 = time.perf_counter()
            try:
                report = solve_quintic(q, ctx)
                cf_ms = (time.perf_counter() - t0) * 1000
                strategy = report.bring.strategy
            except QuinticError as exc:
                rows.append(
                    f"{args.seed},{index},{digits},failed:{type(exc).__name__},,,,FAIL"
                )
                all_ok = False
                continue
            t1 = time.perf_counter()
            oracle_roots = aberth_solve(q.as_poly(ctx), ctx)
            oracle_ms = (time.perf_counter() - t1) * 1000
            match = match_rootsets(report.roots, oracle_roots)
            ok = match.max_distance <= ctx.pow10(-(digits // 2))
            all_ok = all_ok and ok
            rows.append(
                f"{args.seed},{index},{digits},{strategy},{cf_ms:.1f},{oracle_ms:.1f},"
                f"{ctx.mp.nstr(match.max_distance, 3)},{'OK' if ok else 'FAIL'}"
            )
    print("\n".join(rows))
    return 0 if all_ok else 2


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="quintic",
        description="closed-form quintic solver with an independent iterative oracle",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve x^5 + m x^4 + n x^3 + p x^2 + q x + r = 0")
    for flag in _COEFF_FLAGS:
        ps.add_argument(flag, required=True, help=f"coefficient {flag[2:]} as a complex literal")
    ps.add_argument("--digits", type=int, default=_default_digits())
    ps.add_argument("--strategy", choices=["auto", "series", "ode"], default="auto")
    ps.add_argument("--fallback", choices=["none", "oracle"], default="none")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--json", action="store_true", help="emit the JSON report")
    ps.set_defaults(func=cmd_solve)

    pv = sub.add_parser("verify", help="recheck a JSON report produced by solve --json")
    pv.add_argument("report", help="path to the JSON report")
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("bench", help="closed form vs oracle timings on random quintics")
    pb.add_argument("--count", type=int, default=10)
    pb.add_argument("--digits", default="50", help="comma-separated digit settings")
    pb.add_argument("--seed", type=int, default=0)
    pb.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_coefficient_values(argv))
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

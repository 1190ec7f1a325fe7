"""Command line front end.

Subcommands: eval, table, coeffs, polylog, oracle, verify.  Exit codes:
0 success, 1 usage errors, 2 verification failures, 3 domain errors
(singular points, unsupported orders, capacity and tolerance failures).
Error messages go to stderr as "E<code>: <detail>".  All numeric output
uses 17 significant digits and reruns are byte identical; set
ENGLERT_SUMS_THREADS to parallelize verify over a thread pool without
changing the output.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .bernoulli import bernoulli
from .coeffs import c_table, eval_poly, poly_S, sin_poly_variant
from .bracket import centered
from .errors import (
    DomainError,
    EnglertSumsError,
    ToleranceNotReachedError,
    UsageError,
)
from .oracle import arbitrate, oracle_eval
from .polylog import UnitCirclePoint, li_on_circle
from .sums import FAMILY_CODES, SumFamily, is_supported, singular_points
from .sums import eval as eval_family

_FORMATS = ("csv", "tsv", "json")


class ThrowingParser(argparse.ArgumentParser):
    """argparse that raises instead of printing usage and exiting."""

    def error(self, message):
        raise UsageError(message)


def _linspace(z0, z1, steps):
    if steps < 2:
        raise UsageError(f"grid needs at least 2 steps, got {steps}")
    h = (z1 - z0) / (steps - 1)
    return [z0 + i * h for i in range(steps)]


def _positive_order(n):
    if n < 0:
        raise UsageError(f"order must be >= 0, got {n}")
    return n


def _family(code, n):
    return SumFamily.from_code(code, _positive_order(n))


# ---------------------------------------------------------------------------
# simple subcommands


def _cmd_eval(args):
    f = _family(args.family, args.n)
    r = eval_family(f, args.z)
    print(f"{r.value:.16e} path={r.path} error_bound={r.error_bound:.3e}")
    return 0


def _cmd_table(args):
    f = _family(args.family, args.n)
    eps = args.exclusion_eps
    if eps < 0:
        raise UsageError(f"--exclusion-eps must be >= 0, got {eps}")
    lattice = singular_points(f)
    rows, excluded = [], []
    for z in _linspace(args.z0, args.z1, args.steps):
        if lattice.kind != "none" and lattice.distance(z) < eps:
            excluded.append((z, lattice.kind))
            continue
        r = eval_family(f, z)
        rows.append((z, r.value, r.path, r.error_bound))
    if args.format == "json":
        doc = {
            "rows": [
                {"z": z, "value": v, "path": p, "error_bound": e}
                for z, v, p, e in rows
            ],
            "excluded": [{"z": z, "reason": k} for z, k in excluded],
        }
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        return 0
    sep = "\t" if args.format == "tsv" else ","
    print(sep.join(("z", "value", "path", "error_bound")))
    for z, v, p, e in rows:
        print(sep.join((f"{z:.16e}", f"{v:.16e}", p, f"{e:.3e}")))
    for z, kind in excluded:
        print(f"# excluded z={z:.16e} reason={kind}")
    return 0


def _latex_polynomial(row):
    parts = []
    for i, c in enumerate(row):
        sign = "-" if c < 0 else "+"
        num, den = abs(c.numerator), c.denominator
        mag = f"\\frac{{{num}}}{{{den}}}" if den != 1 else f"{num}"
        if i > 0 and num == 1 and den == 1:
            mag = ""
        term = mag if i == 0 else f"{mag}\\langle z\\rangle^{{{2 * i}}}"
        if not parts:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f"{sign} {term}")
    return " ".join(parts)


def _cmd_coeffs(args):
    if args.bernoulli is not None:
        b = bernoulli(args.bernoulli)
        print(f"{b.numerator}/{b.denominator}")
        return 0
    if args.n is None:
        raise UsageError("coeffs needs an order n or --bernoulli")
    if args.n < 1:
        raise UsageError(f"coefficient tables start at order 1, got {args.n}")
    row = c_table(args.n)
    if args.latex:
        print(_latex_polynomial(row))
        return 0
    for i, c in enumerate(row):
        print(f"{args.n},{i},{c.numerator},{c.denominator}")
    return 0


def _cmd_polylog(args):
    point = UnitCirclePoint.from_theta(args.theta)
    v = li_on_circle(args.a, point)
    print(f"{v.real_part:.16e} {v.imag_part:.16e} {v.error_bound:.16e}")
    return 0


def _cmd_oracle(args):
    f = _family(args.family, args.n)
    report = oracle_eval(f, args.z, args.tol)
    print(
        f"{report.value:.16e} {report.terms_used} "
        f"{report.tail_bound:.3e} {report.mode}"
    )
    return 0


# ---------------------------------------------------------------------------
# verify


def _parse_families(text):
    if not text:
        return list(FAMILY_CODES)
    codes = [c.strip() for c in text.split(",") if c.strip()]
    for c in codes:
        if c not in FAMILY_CODES:
            raise UsageError(
                f"unknown family code {c!r}; expected one of {', '.join(FAMILY_CODES)}"
            )
    if not codes:
        raise UsageError("--families must name at least one family")
    return codes


def _parse_orders(text):
    raw = text.split("..", 1) if ".." in text else (text, text)
    try:
        lo, hi = int(raw[0]), int(raw[1])
    except ValueError:
        raise UsageError(f"--orders must look like 0..3 or 2, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"--orders needs 0 <= lo <= hi, got {text!r}")
    if hi > 60:
        raise UsageError(f"--orders above 60 is not useful, got {text!r}")
    return range(lo, hi + 1)


def _verify_point(f, z, tol):
    closed = eval_family(f, z)
    if f.power >= 2:
        oracle_tol, base = tol, tol
    else:
        oracle_tol, base = max(tol, 1e-6), max(tol, 1e-5)
    report = oracle_eval(f, z, oracle_tol, strict=False)
    allowed = max(base, report.tail_bound + closed.error_bound)
    diff = abs(closed.value - report.value)
    return {
        "family": f.code,
        "order": f.order,
        "z": z,
        "closed_value": closed.value,
        "oracle_value": report.value,
        "diff": diff,
        "tol": allowed,
        "verdict": "PASS" if diff <= allowed else "FAIL",
    }


def _thread_count():
    raw = os.environ.get("ENGLERT_SUMS_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"ENGLERT_SUMS_THREADS must be an integer, got {raw!r}") from None


def _run_grid(tasks, tol):
    threads = _thread_count()
    if threads == 1:
        return [_verify_point(f, z, tol) for f, z in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda t: _verify_point(t[0], t[1], tol), tasks))


_VERIFY_COLUMNS = (
    "family",
    "order",
    "z",
    "closed_value",
    "oracle_value",
    "diff",
    "tol",
    "verdict",
)


def _format_cell(key, value):
    if key in ("z", "closed_value", "oracle_value"):
        return f"{value:.16e}"
    if key in ("diff", "tol"):
        return f"{value:.3e}"
    return str(value)


def _render_rows(rows, excluded, columns, fmt):
    if fmt == "json":
        return json.dumps(
            {"rows": rows, "excluded": excluded},
            sort_keys=True,
            separators=(",", ":"),
        )
    sep = "\t" if fmt == "tsv" else ","
    lines = [sep.join(columns)]
    for row in rows:
        lines.append(sep.join(_format_cell(k, row[k]) for k in columns))
    for item in excluded:
        lines.append(
            "# excluded family={family} order={order} z={z:.16e} reason={reason}".format(
                **item
            )
        )
    return "\n".join(lines)


def _emit_report(text, summary, report_path):
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n" + summary + "\n")
    else:
        print(text)
    print(summary)


def _cmd_verify(args):
    if args.tol < 1e-10:
        raise UsageError(f"--tol must be >= 1e-10, got {args.tol}")
    if args.exclusion_eps < 0:
        raise UsageError(f"--exclusion-eps must be >= 0, got {args.exclusion_eps}")
    if args.arbitrate:
        return _cmd_arbitrate(args)
    codes = _parse_families(args.families)
    orders = _parse_orders(args.orders)
    z0, z1, raw_steps = args.grid
    steps = int(raw_steps)
    if steps != raw_steps:
        raise UsageError(f"grid step count must be an integer, got {raw_steps}")
    grid = _linspace(z0, z1, steps)
    tasks, excluded = [], []
    for code in codes:
        for n in orders:
            f = SumFamily.from_code(code, n)
            if not is_supported(f):
                continue
            lattice = singular_points(f)
            for z in grid:
                if lattice.kind != "none" and lattice.distance(z) < args.exclusion_eps:
                    excluded.append(
                        {"family": code, "order": n, "z": z, "reason": lattice.kind}
                    )
                else:
                    tasks.append((f, z))
    rows = _run_grid(tasks, args.tol)
    failed = sum(1 for r in rows if r["verdict"] == "FAIL")
    total = len(rows)
    summary = f"PASS {total}/{total}" if failed == 0 else f"FAIL {failed}/{total}"
    text = _render_rows(rows, excluded, _VERIFY_COLUMNS, args.format)
    _emit_report(text, summary, args.report)
    return 0 if failed == 0 else 2


# ---------------------------------------------------------------------------
# arbitration suites: competing closed forms judged by the series oracle


def _poly_claim(poly):
    return lambda z: float(eval_poly(poly, Fraction(z)))


def _suite_sine_display():
    """Recursion-built odd sine polynomials vs the as-printed variant."""
    out = []
    for n in (1, 2, 3, 4):
        f = SumFamily.from_code("S", n)
        claim_a = _poly_claim(poly_S(n))
        claim_b = _poly_claim(sin_poly_variant(n))
        grid = _linspace(-0.75, 0.75, 16)
        out.append(("sine-polynomial-display", f, arbitrate(claim_a, claim_b, f, grid), "a"))
    return out


def _suite_quarter_shift_cosine():
    """Half-difference route vs the doubled-argument quarter-shift route."""
    f = SumFamily.from_code("bCp", 1)
    claim_a = lambda z: eval_family(f, z).value
    s1 = poly_S(1)

    def claim_b(z):
        zq = Fraction(z)
        return float(eval_poly(s1, zq - Fraction(1, 4)) - eval_poly(s1, 2 * zq) / 8)

    grid = _linspace(-0.7, 0.7, 16)
    return [("quarter-shift-odd-cosine", f, arbitrate(claim_a, claim_b, f, grid), "both")]


def _suite_quarter_shift_sine():
    """Half-difference route vs the explicit quartic difference."""
    f = SumFamily.from_code("bSp", 2)
    claim_a = lambda z: eval_family(f, z).value

    def claim_b(z):
        wp = centered(Fraction(z) + Fraction(1, 4))
        wm = centered(Fraction(z) - Fraction(1, 4))
        half = Fraction(1, 2)
        return float(
            (wp**2 * (half - wp**2) - wm**2 * (half - wm**2)) / 6
        )

    grid = _linspace(-0.7, 0.7, 16)
    return [("quarter-shift-odd-sine", f, arbitrate(claim_a, claim_b, f, grid), "both")]


def _suite_modified_arctan():
    """Prefactor reduction vs the principal-branch arctan form."""
    f = SumFamily.from_code("P", 0)
    claim_a = lambda z: eval_family(f, z).value

    def claim_b(z):
        w = cmath.exp(1j * math.pi * z)
        return -(w * cmath.atan(1.0 / w)).imag / math.pi

    grid = _linspace(-0.7, 0.7, 16)
    return [("modified-sine-arctan", f, arbitrate(claim_a, claim_b, f, grid), "both")]


_ARBITRATE_COLUMNS = (
    "suite",
    "family",
    "order",
    "z",
    "value_a",
    "value_b",
    "oracle_value",
    "diff_a",
    "diff_b",
    "a_ok",
    "b_ok",
)


def _format_arb_cell(key, value):
    if key in ("z", "value_a", "value_b", "oracle_value"):
        return f"{value:.16e}"
    if key in ("diff_a", "diff_b"):
        return f"{value:.3e}"
    return str(value)


def _cmd_arbitrate(args):
    suites = (
        _suite_sine_display()
        + _suite_quarter_shift_cosine()
        + _suite_quarter_shift_sine()
        + _suite_modified_arctan()
    )
    rows, lines, ok_count = [], [], 0
    for name, f, report, expected in suites:
        total = len(report.rows)
        for r in report.rows:
            rows.append(
                {
                    "suite": name,
                    "family": f.code,
                    "order": f.order,
                    "z": r.z,
                    "value_a": r.value_a,
                    "value_b": r.value_b,
                    "oracle_value": r.oracle_value,
                    "diff_a": r.diff_a,
                    "diff_b": r.diff_b,
                    "a_ok": r.a_ok,
                    "b_ok": r.b_ok,
                }
            )
        matched = report.winner == expected
        ok_count += matched
        lines.append(
            f"arbitrate {name} {f.code} n={f.order}: "
            f"candidate A {report.a_pass}/{total}, candidate B {report.b_pass}/{total}, "
            f"winner={report.winner} expected={expected}"
        )
    if args.format == "json":
        text = json.dumps(
            {"rows": rows, "suites": lines}, sort_keys=True, separators=(",", ":")
        )
    else:
        sep = "\t" if args.format == "tsv" else ","
        out = [sep.join(_ARBITRATE_COLUMNS)]
        for row in rows:
            out.append(sep.join(_format_arb_cell(k, row[k]) for k in _ARBITRATE_COLUMNS))
        out.extend(f"# {line}" for line in lines)
        text = "\n".join(out)
    n_suites = len(suites)
    summary = (
        f"PASS {n_suites}/{n_suites}"
        if ok_count == n_suites
        else f"FAIL {n_suites - ok_count}/{n_suites}"
    )
    _emit_report(text, summary, args.report)
    return 0 if ok_count == n_suites else 2


# ---------------------------------------------------------------------------
# parser and entry point


def _build_parser():
    parser = ThrowingParser(
        prog="englert-sums",
        description="Closed forms, series oracles and cross-checks for the "
        "generalized Fourier family catalogue.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("eval", help="closed-form value at z")
    p.add_argument("family", choices=FAMILY_CODES)
    p.add_argument("n", type=int)
    p.add_argument("z", type=float)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("table", help="closed-form values on a grid")
    p.add_argument("family", choices=FAMILY_CODES)
    p.add_argument("n", type=int)
    p.add_argument("z0", type=float)
    p.add_argument("z1", type=float)
    p.add_argument("steps", type=int)
    p.add_argument("--format", choices=_FORMATS, default="csv")
    p.add_argument("--exclusion-eps", type=float, default=1e-3)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("coeffs", help="exact polynomial coefficient rows")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--latex", action="store_true")
    p.add_argument("--bernoulli", type=int, metavar="R")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("polylog", help="Li_a on the unit circle at angle theta")
    p.add_argument("a", type=int)
    p.add_argument("theta", type=float)
    p.set_defaults(func=_cmd_polylog)

    p = sub.add_parser("oracle", help="brute-force series value at z")
    p.add_argument("family", choices=FAMILY_CODES)
    p.add_argument("n", type=int)
    p.add_argument("z", type=float)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="closed forms against the series oracle")
    p.add_argument("--families", default="")
    p.add_argument("--orders", default="0..3")
    p.add_argument(
        "--grid", nargs=3, type=float, default=[-1.3, 2.7, 41], metavar=("Z0", "Z1", "STEPS")
    )
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--exclusion-eps", type=float, default=1e-3)
    p.add_argument("--format", choices=_FORMATS, default="csv")
    p.add_argument("--report")
    p.add_argument("--arbitrate", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None):
    try:
        parser = _build_parser()
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            raise UsageError("a subcommand is required (see --help)")
        return args.func(args)
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return int(code) if code else 0
    except (UsageError, DomainError) as exc:
        print(f"E1: {exc}", file=sys.stderr)
        return 1
    except ToleranceNotReachedError as exc:
        print(f"E3: {exc}", file=sys.stderr)
        return 3
    except EnglertSumsError as exc:
        print(f"E3: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"E3: {exc}", file=sys.stderr)
        return 3


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

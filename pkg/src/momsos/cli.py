"""Command-line surface.

Subcommands: certify, moments, verify, figure, barrier, table.  All
numeric output is exact (fractions rendered as "num/den" strings; the
figure CSV adds display-only decimal columns).  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import momentside, soscert, verify
from .errors import MomsosError
from .exactnum import decimal_str

FIGURE_COLUMNS = ("x", "objective_shifted", "p_term", "gq_term", "a_poly")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _coeff_strings(poly) -> list[str]:
    return [str(c) for c in poly.coeffs]


def cmd_certify(r: int, fmt: str) -> int:
    cert = soscert.build_certificate(r)
    if fmt == "json":
        payload = {
            "order": cert.order,
            "epsilon": str(cert.epsilon),
            "a_poly": _coeff_strings(cert.a_poly),
            "b_poly": _coeff_strings(cert.b_poly),
            "p_poly": _coeff_strings(cert.p_poly),
            "q_poly": _coeff_strings(cert.q_poly),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"order: {cert.order}")
        print(f"epsilon: {cert.epsilon}")
        print(f"A: [{', '.join(_coeff_strings(cert.a_poly))}]")
        print(f"B: [{', '.join(_coeff_strings(cert.b_poly))}]")
        print(f"p: [{', '.join(_coeff_strings(cert.p_poly))}]")
        print(f"q: [{', '.join(_coeff_strings(cert.q_poly))}]")
    return 0


def cmd_moments(r: int, fmt: str, even_only: bool) -> int:
    y = momentside.moments(r)
    values = y.even_values if even_only else y.values
    if fmt == "json":
        payload = {
            "order": y.order,
            "even_only": even_only,
            "values": [str(v) for v in values],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(", ".join(str(v) for v in values))
    return 0


def _render_report_text(report) -> str:
    lines = [f"order {report.order}: epsilon = {report.epsilon}, "
             f"primal = {report.primal_value}, gap = {report.gap}"]
    for check in report.checks:
        mark = "PASS" if check.passed else "FAIL"
        lines.append(f"  [{mark}] {check.name}: {check.detail}")
    return "\n".join(lines)


def cmd_verify(orders: list[int], depth: str, fmt: str) -> int:
    reports = [verify.verify_order(r, depth) for r in orders]
    if fmt == "json":
        if len(reports) == 1:
            print(json.dumps(reports[0].to_json_dict(), indent=2))
        else:
            print(json.dumps([rep.to_json_dict() for rep in reports], indent=2))
    else:
        for rep in reports:
            print(_render_report_text(rep))
    return 0 if all(rep.all_passed for rep in reports) else 1


def figure_rows(r: int, samples: int):
    """Exact figure rows for the certificate identity f - eps = p + gq."""
    cert = soscert.build_certificate(r)
    p = cert.p_poly
    gq = soscert.G_POLY * cert.q_poly
    a = cert.a_poly
    rows = []
    for k in range(samples):
        x = Fraction(2 * k, samples - 1) - 1
        rows.append((x, soscert.F_POLY(x) - cert.epsilon, p(x), gq(x), a(x)))
    return rows


def cmd_figure(r: int, samples: int, out: str) -> int:
    rows = figure_rows(r, samples)
    header = ",".join(FIGURE_COLUMNS) + "," + ",".join(f"{c}_dec" for c in FIGURE_COLUMNS)
    lines = [header]
    for row in rows:
        exact = [str(v) for v in row]
        display = [decimal_str(v) for v in row]
        lines.append(",".join(exact + display))
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def cmd_barrier(mu: Fraction, fmt: str) -> int:
    x_squared = 1 - 3 * mu
    lam = 1 / (27 * mu * mu)
    hessian = Fraction(4, 3) / mu - 4
    if fmt == "json":
        payload = {
            "mu": str(mu),
            "x_squared": str(x_squared),
            "lambda": str(lam),
            "hessian": str(hessian),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"mu: {mu}")
        print(f"x^2: {x_squared}")
        print(f"lambda: {lam}")
        print(f"hessian: {hessian}")
    return 0


def cmd_table(lo: int, hi: int) -> int:
    certs = [soscert.build_certificate(r) for r in range(lo, hi + 1)]
    for cert in certs:
        print(f"A_{cert.order}(x) = {cert.a_poly}")
        print(f"B_{cert.order}(x) = {cert.b_poly}")
    print()
    for cert in certs:
        r = cert.order
        even = momentside.moments(r).even_values
        names = ", ".join(f"y_{2 * k}" for k in range(r + 1))
        values = ", ".join(str(v) for v in even)
        print(f"Order r={r}: ({names}) = ({values})")
    return 0


def _parse_orders(text: str) -> list[int]:
    """Parse '--order N' or '--order A..B' into an explicit list."""
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty order range {text!r}")
        if lo < 3:
            raise ValueError("orders below 3 are not defined")
        return list(range(lo, hi + 1))
    r = int(text)
    if r < 3:
        raise ValueError("orders below 3 are not defined")
    return [r]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momsos",
        description="Exact certificates and moments for min 1-x^2 s.t. (1-x^2)^3 >= 0.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_certify = sub.add_parser("certify", help="print the order-r SOS certificate")
    p_certify.add_argument("--order", required=True)
    p_certify.add_argument("--format", choices=("text", "json"), default="text")

    p_moments = sub.add_parser("moments", help="print the order-r moment vector")
    p_moments.add_argument("--order", required=True)
    p_moments.add_argument("--format", choices=("text", "json"), default="text")
    p_moments.add_argument("--even-only", action="store_true")

    p_verify = sub.add_parser("verify", help="run the verification checklist")
    p_verify.add_argument("--order", required=True, help="single order N or range A..B")
    p_verify.add_argument(
        "--depth", choices=("polynomial-only", "full"), default="full"
    )
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_figure = sub.add_parser("figure", help="write certificate curves as CSV")
    p_figure.add_argument("--order", required=True)
    p_figure.add_argument("--samples", type=int, default=401)
    p_figure.add_argument("--out", required=True)

    p_barrier = sub.add_parser("barrier", help="interior-point barrier diagnostics")
    p_barrier.add_argument("--mu", required=True, help="rational in (0, 1/3), e.g. 1/12")
    p_barrier.add_argument("--format", choices=("text", "json"), default="text")

    p_table = sub.add_parser("table", help="print certificate and moment tables")
    p_table.add_argument("--from", dest="lo", type=int, default=3)
    p_table.add_argument("--to", dest="hi", type=int, default=8)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "certify":
            orders = _parse_orders(args.order)
            if len(orders) != 1:
                return _fail_usage("certify takes a single order")
            return cmd_certify(orders[0], args.format)
        if args.command == "moments":
            orders = _parse_orders(args.order)
            if len(orders) != 1:
                return _fail_usage("moments takes a single order")
            return cmd_moments(orders[0], args.format, args.even_only)
        if args.command == "verify":
            orders = _parse_orders(args.order)
            depth = args.depth.replace("-", "_")
            return cmd_verify(orders, depth, args.format)
        if args.command == "figure":
            orders = _parse_orders(args.order)
            if len(orders) != 1:
                return _fail_usage("figure takes a single order")
            if args.samples < 2:
                return _fail_usage("need at least 2 samples")
            return cmd_figure(orders[0], args.samples, args.out)
        if args.command == "barrier":
            try:
                mu = Fraction(args.mu)
            except (ValueError, ZeroDivisionError):
                return _fail_usage(f"cannot parse {args.mu!r} as a fraction")
            if not 0 < mu < Fraction(1, 3):
                return _fail_usage("mu must lie strictly inside (0, 1/3)")
            return cmd_barrier(mu, args.format)
        if args.command == "table":
            if args.lo < 3 or args.hi < args.lo:
                return _fail_usage("need 3 <= from <= to")
            return cmd_table(args.lo, args.hi)
        return _fail_usage(f"unknown command {args.command!r}")
    except ValueError as exc:
        return _fail_usage(str(exc))
    except MomsosError as exc:
        return _fail_usage(str(exc))


def main_entry():  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())

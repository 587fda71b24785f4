"""Command-line interface.

Subcommands:

* ``series``: print q-expansion coefficients of an Eisenstein-type series
  (by form and weight) or of a case uniformizer.
* ``sequences``: compute the approximant table of a case and write it as
  CSV, JSON, or plain text.
* ``certify``: run the finite-range irrationality criterion for a case
  against the p-adic oracle and emit JSONL certificates plus a summary.
* ``oracle``: evaluate a p-adic limit directly and print its certified
  representative and leading digits.
* ``recurrence``: verify the built-in Catalan recurrence against freshly
  computed tables, or refit it from scratch.

All JSON output is emitted with sorted keys so repeated runs are byte
identical.  Big integers are serialized as decimal strings; real numbers
are fixed to ten decimal places.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import curves, recurrence
from .diophantine import (
    DEFAULT_THETA_REQUIRED,
    DEFAULT_WINDOW,
    criterion_check,
)
from .eisenstein import (
    series_e,
    series_e_prime,
    series_e_star,
    series_evil,
    series_f,
    series_f_prime,
)
from .expansion import max_terms_cap, sequences
from .oracle import catalan_2adic_oracle, zeta_p_oracle

_ORACLE_TARGETS = ("zeta-p2", "zeta-p3", "catalan")
_FORMS = ("e", "e-star", "e-prime", "evil", "f", "f-prime")


def _real(value: float) -> str:
    return format(value, ".10f")


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _resolve_case(parser: argparse.ArgumentParser, family: str, k: int):
    try:
        return curves.catalog(family, k)
    except ValueError as exc:
        parser.error(str(exc))


def _check_cap(parser: argparse.ArgumentParser, count: int) -> None:
    cap = max_terms_cap()
    if count > cap:
        parser.error(
            f"{count} terms exceeds the cap of {cap}; "
            "raise PADICAPERY_MAX_TERMS to allow more"
        )
    if count < 1:
        parser.error("term count must be positive")


def _cmd_series(parser, args) -> int:
    if (args.form is None) == (args.case is None):
        parser.error("exactly one of --form and --case is required")
    prec = args.prec
    if prec < 1:
        parser.error("--prec must be positive")
    if args.case is not None:
        config = _resolve_case(parser, args.case, args.k)
        series = curves.uniformizer_series(config, prec)
    else:
        needs_p = args.form in ("e-star", "e-prime", "evil")
        if needs_p and args.p is None:
            parser.error(f"--p is required for form {args.form}")
        if not needs_p and args.p is not None:
            parser.error(f"--p does not apply to form {args.form}")
        if args.weight is None and args.form != "f-prime":
            parser.error("--weight is required for this form")
        try:
            if args.form == "e":
                series = series_e(args.weight, prec)
            elif args.form == "e-star":
                series = series_e_star(args.p, args.weight, prec)
            elif args.form == "e-prime":
                series = series_e_prime(args.p, args.weight, prec)
            elif args.form == "evil":
                series = series_evil(args.p, args.weight, prec)
            elif args.form == "f":
                series = series_f(args.weight, prec)
            else:
                series = series_f_prime(prec)
        except ValueError as exc:
            parser.error(str(exc))
    lines = [f"{n} {series[n]}" for n in range(series.prec)]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _table_rows(table):
    rows = []
    for row in table.rows:
        rows.append(
            {
                "n": row.n,
                "a_num": str(row.a.numerator),
                "a_den": str(row.a.denominator),
                "b": str(row.b),
                "p_n": str(row.p_n) if row.p_n is not None else None,
                "q_n": str(row.q_n) if row.q_n is not None else None,
            }
        )
    return rows


def _cmd_sequences(parser, args) -> int:
    _check_cap(parser, args.count)
    config = _resolve_case(parser, args.case, args.k)
    table = sequences(config, args.count)
    rows = _table_rows(table)
    if args.format == "json":
        text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "a_num", "a_den", "b", "p_n", "q_n"])
        for row in rows:
            writer.writerow(
                [row["n"], row["a_num"], row["a_den"], row["b"], row["p_n"], row["q_n"]]
            )
        text = buffer.getvalue()
    else:
        lines = [
            f"{row['n']} a={row['a_num']}/{row['a_den']} b={row['b']} "
            f"p/q={row['p_n']}/{row['q_n']}"
            for row in rows
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def _case_oracle(config, bits: int):
    if config.family == "catalan-p2":
        return catalan_2adic_oracle(bits)
    if config.p in (2, 3):
        return zeta_p_oracle(config.p, config.k, bits)
    return None


def _cmd_certify(parser, args) -> int:
    window = tuple(args.window)
    if window[0] < 0 or window[1] < window[0]:
        parser.error("--window needs 0 <= LO <= HI")
    count = max(args.count, window[1] + 1)
    _check_cap(parser, count)
    if args.bits < 1:
        parser.error("--bits must be positive")
    config = _resolve_case(parser, args.case, args.k)
    table = sequences(config, count)
    eta = _case_oracle(config, args.bits)
    report = criterion_check(
        config, table, eta, theta_required=DEFAULT_THETA_REQUIRED, window=window
    )
    lines = []
    for cert in report.certificates:
        lines.append(
            json.dumps(
                {
                    "case": cert.case_id,
                    "certified": cert.certified,
                    "implied_exponent": None
                    if cert.implied_exponent is None
                    else _real(cert.implied_exponent),
                    "log_max_size": _real(cert.log_max_size),
                    "n": cert.n,
                    "p_n": str(cert.p_n),
                    "q_n": str(cert.q_n),
                    "sign": cert.sign,
                    "theta_closed": _real(report.theta_closed),
                    "valuation_gap": cert.valuation_gap,
                },
                sort_keys=True,
            )
        )
    lines.append(
        json.dumps(
            {
                "case": report.case_id,
                "certified_rows": report.certified_rows,
                "oracle_bits": None if eta is None else eta.agreement_exponent,
                "rows": len(report.certificates),
                "sign": report.sign,
                "theta_closed": _real(report.theta_closed),
                "theta_required": _real(report.theta_required),
                "verdict": report.verdict,
            },
            sort_keys=True,
        )
    )
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_oracle(parser, args) -> int:
    if args.bits < 1:
        parser.error("--bits must be positive")
    if args.digits < 1:
        parser.error("--digits must be positive")
    if args.target == "catalan":
        if args.n != 1:
            parser.error("the Catalan oracle is defined for n = 1 only")
        value = catalan_2adic_oracle(args.bits)
    else:
        p = 2 if args.target == "zeta-p2" else 3
        if args.n < 1:
            parser.error("-n must be positive")
        value = zeta_p_oracle(p, args.n, args.bits)
    payload = {
        "agreement_exponent": value.agreement_exponent,
        "digits": [[exponent, digit] for exponent, digit in value.digits(args.digits)],
        "p": value.p,
        "representative": {
            "den": str(value.representative.denominator),
            "num": str(value.representative.numerator),
        },
        "target": args.target,
    }
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.output)
    return 0


def _cmd_recurrence(parser, args) -> int:
    _check_cap(parser, args.count)
    if args.count < 6:
        parser.error("-n must be at least 6 for a meaningful check")
    config = _resolve_case(parser, args.case, 1)
    table = sequences(config, args.count)
    spec = recurrence.catalan_recurrence()
    top = args.count - 2
    if args.action == "verify":
        violations_b = recurrence.verify_recurrence(spec, table.b_list(), 1, top)
        violations_a = recurrence.verify_recurrence(spec, table.a_list(), 2, top)
        payload = {
            "case": config.case_id,
            "coeff_polys": [list(poly) for poly in spec.coeff_polys],
            "degree": spec.degree,
            "order": spec.order,
            "range_a": [2, top],
            "range_b": [1, top],
            "violations_a": len(violations_a),
            "violations_b": len(violations_b),
        }
        code = 0 if not violations_a and not violations_b else 1
    else:
        fitted = recurrence.fit_recurrence(table.b_list(), 2, 2)
        payload = {
            "case": config.case_id,
            "coeff_polys": [list(poly) for poly in fitted.coeff_polys],
            "degree": fitted.degree,
            "matches_builtin": fitted == spec,
            "order": fitted.order,
            "source": "b",
        }
        code = 0 if fitted == spec else 1
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.output)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padicapery",
        description="Exact approximant tables and p-adic irrationality "
        "certificates for zeta and Catalan limits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser("series", help="print q-expansion coefficients")
    p_series.add_argument("--form", choices=_FORMS)
    p_series.add_argument("--case", choices=curves.FAMILIES)
    p_series.add_argument("-k", type=int, default=1)
    p_series.add_argument("--weight", type=int)
    p_series.add_argument("--p", type=int)
    p_series.add_argument("--prec", type=int, default=8)
    p_series.add_argument("-o", "--output")
    p_series.set_defaults(func=_cmd_series)

    p_seq = sub.add_parser("sequences", help="compute an approximant table")
    p_seq.add_argument("--case", choices=curves.FAMILIES, required=True)
    p_seq.add_argument("-k", type=int, default=1)
    p_seq.add_argument("-n", "--count", type=int, default=8)
    p_seq.add_argument("--format", choices=("csv", "json", "plain"), default="csv")
    p_seq.add_argument("-o", "--output")
    p_seq.set_defaults(func=_cmd_sequences)

    p_cert = sub.add_parser("certify", help="run the irrationality criterion")
    p_cert.add_argument("--case", choices=curves.FAMILIES, required=True)
    p_cert.add_argument("-k", type=int, default=1)
    p_cert.add_argument("-n", "--count", type=int, default=12)
    p_cert.add_argument("--bits", type=int, default=40)
    p_cert.add_argument(
        "--window", type=int, nargs=2, default=list(DEFAULT_WINDOW), metavar=("LO", "HI")
    )
    p_cert.add_argument("-o", "--output")
    p_cert.set_defaults(func=_cmd_certify)

    p_oracle = sub.add_parser("oracle", help="evaluate a p-adic limit")
    p_oracle.add_argument("--target", choices=_ORACLE_TARGETS, required=True)
    p_oracle.add_argument("-n", type=int, default=1)
    p_oracle.add_argument("--bits", type=int, default=40)
    p_oracle.add_argument("--digits", type=int, default=10)
    p_oracle.add_argument("-o", "--output")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_rec = sub.add_parser("recurrence", help="verify or refit the recurrence")
    p_rec.add_argument("action", choices=("verify", "fit"))
    p_rec.add_argument("--case", choices=("catalan-p2",), default="catalan-p2")
    p_rec.add_argument("-n", "--count", type=int, default=26)
    p_rec.add_argument("-o", "--output")
    p_rec.set_defaults(func=_cmd_recurrence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except curves.IdentityError as exc:
        print(f"identity check failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``qpp verify | series | ntable | coeff``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from .chebyshev import piecewise_coeff
from .combinatorics import blocoeff_multisum, blorank_series, build_ntable, spt_series
from .errors import EnumerationBudgetExceeded, UnknownCheckId, UnknownSeriesName
from .identities import pair_sum_series, run_all
from .qtoolkit import (
    Monomial,
    eta_quotient,
    euler,
    gordon_series,
    jtp_square_series,
    mul_poch,
    psi_series,
    quintuple_lhs,
    theta_shimura,
    unary_theta,
)
from .series import FracQSeries, QSeries

DEFAULT_ORDER = 40
NTABLE_GUARD = 12
MULTISUM_REACH = 12
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get("QPP_DEFAULT_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"QPP_DEFAULT_ORDER={raw!r} is not an integer") from None
    if val < 1:
        raise UsageError("QPP_DEFAULT_ORDER must be >= 1")
    return val


def fmt(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _json_rat(c) -> dict:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


# ---------------------------------------------------------------------------
# series names

_ETA = re.compile(r"^eta:(\d+\^-?\d+(?:,\d+\^-?\d+)*)$")


def _eta_spec(text: str):
    return [tuple(int(x) for x in part.split("^")) for part in text.split(",")]


SERIES = {
    "euler": ("(q;q)_inf", euler),
    "partitions": ("1/(q;q)_inf", lambda N: euler(N).invert()),
    "gordon": ("sum (6n+1) q^{n(3n+1)/2}", gordon_series),
    "psi": ("sum q^{2n^2-n}", psi_series),
    "jtp": ("sum (-1)^j q^{j^2}", jtp_square_series),
    "theta-shimura": ("sum chi12(n) n^3 q^{n^2/24}", theta_shimura),
    "theta-1": ("sum chi12(n) n q^{n^2/24}", lambda N: unary_theta(1, N)),
    "spt": ("sum spt(n) q^n", spt_series),
    "overpartition-pairs": ("sum N(r,s,m,n) z^m q^n at d = e = 1", lambda N: blorank_series(1, 1, N)),
    "pair-sum": ("sum (z^2,z^-2)_n q^n/(-zq,-q/z)_n", pair_sum_series),
    "quintuple": ("sum q^{n(3n+1)/2} (z^{3n} - z^{-3n-1})", quintuple_lhs),
}


def build_series(name: str, order: int):
    m = _ETA.match(name)
    if m:
        return eta_quotient(_eta_spec(m.group(1)), order)
    if name not in SERIES:
        raise UnknownSeriesName(name)
    return SERIES[name][1](order)


def render_series(s, fmt_name: str) -> str:
    offset = None
    if isinstance(s, FracQSeries):
        offset, s = s.offset, s.body
    if fmt_name == "json":
        rows = []
        if isinstance(s, QSeries):
            for n, c in enumerate(s.coefficients):
                rows.append({"m": None, "n": n, **_json_rat(c)})
        else:
            for n in range(s.order + 1):
                for e, c in sorted(s[n].items()):
                    rows.append({"m": e, "n": n, **_json_rat(c)})
        return json.dumps({"order": s.order, "offset": None if offset is None else fmt(offset), "coefficients": rows})
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "n", "num", "den"])
        if isinstance(s, QSeries):
            for n, c in enumerate(s.coefficients):
                c = Fraction(c)
                w.writerow(["", n, c.numerator, c.denominator])
        else:
            for n in range(s.order + 1):
                for e, c in sorted(s[n].items()):
                    c = Fraction(c)
                    w.writerow([e, n, c.numerator, c.denominator])
        return buf.getvalue().rstrip("\n")
    lines = []
    if offset:
        lines.append(f"q^({fmt(offset)}) *")
    if isinstance(s, QSeries):
        lines.append(", ".join(fmt(c) for c in s.coefficients))
    else:
        for n in range(s.order + 1):
            lines.append(f"q^{n}: {s[n]}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args, out) -> int:
    reports = run_all(args.order, args.ids or None)
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in reports], indent=1) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["id", "pass", "order", "m", "n", "lhs", "rhs", "elapsed_ms"])
        for r in reports:
            fm = r.first_mismatch
            row = ["", "", "", ""]
            if fm is not None:
                row = ["" if fm.m is None else fm.m, fm.n, fmt(fm.lhs), fmt(fm.rhs)]
            w.writerow([r.id, str(r.passed).lower(), r.order_checked, *row, r.elapsed_ms])
    else:
        for r in reports:
            tag = "PASS" if r.passed else "FAIL"
            line = f"{tag} {r.id} order={r.order_checked} {r.elapsed_ms}ms"
            fm = r.first_mismatch
            if fm is not None:
                where = f"n={fm.n}" if fm.m is None else f"m={fm.m} n={fm.n}"
                line += f" first mismatch {where}: lhs={fmt(fm.lhs)} rhs={fmt(fm.rhs)}"
            out.write(line + "\n")
        failed = sum(not r.passed for r in reports)
        out.write(f"{len(reports) - failed}/{len(reports)} checks passed\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_series(args, out) -> int:
    name = args.name or args.series
    if not name:
        raise UsageError("series needs a name")
    out.write(render_series(build_series(name, args.order), args.format) + "\n")
    return EXIT_OK


def cmd_ntable(args, out) -> int:
    max_n = args.max_n
    if max_n < 1:
        raise UsageError("--n must be >= 1")
    if max_n > NTABLE_GUARD and not args.force:
        raise EnumerationBudgetExceeded(f"--n {max_n} exceeds {NTABLE_GUARD}; pass --force")
    rows = [row for row in build_ntable(max_n).rows() if row[3] >= 1]
    if args.format == "json":
        keys = ("r", "s", "m", "n", "count")
        out.write(json.dumps([dict(zip(keys, row)) for row in rows]) + "\n")
    else:
        sep = "," if args.format == "csv" else " "
        w = csv.writer(out, delimiter=sep, lineterminator="\n")
        w.writerow(["r", "s", "m", "n", "count"])
        w.writerows(rows)
    return EXIT_OK


def coeff_report(m: int, n: int) -> dict:
    """Series value, closed-form prediction and (within reach) the N-multisum."""
    if n < 0:
        raise UsageError("--n must be >= 0")
    P = mul_poch(pair_sum_series(n), Monomial(1, 0, 1), None, 1)
    series_val = P.coeff(m, n)
    pred = piecewise_coeff(m, n)
    multi = blocoeff_multisum(m, n, build_ntable(n)) if n <= MULTISUM_REACH else None
    agree = series_val == pred and (multi is None or multi == pred)
    return {"m": m, "n": n, "series": series_val, "prediction": pred, "multisum": multi, "agree": agree}


def cmd_coeff(args, out) -> int:
    if args.m is None or args.n is None:
        raise UsageError("coeff needs --m and --n")
    if args.n > args.order:
        raise UsageError(f"--n {args.n} exceeds --order {args.order}")
    rep = coeff_report(args.m, args.n)
    multi = rep["multisum"]
    if args.format == "json":
        rec = {
            "m": rep["m"],
            "n": rep["n"],
            "series": _json_rat(rep["series"]),
            "prediction": _json_rat(rep["prediction"]),
            "multisum": None if multi is None else _json_rat(multi),
            "agree": rep["agree"],
        }
        out.write(json.dumps(rec) + "\n")
    elif args.format == "csv":
        out.write("m,n,series,prediction,multisum,agree\n")
        ms = "" if multi is None else fmt(multi)
        out.write(f"{rep['m']},{rep['n']},{fmt(rep['series'])},{fmt(rep['prediction'])},{ms},{str(rep['agree']).lower()}\n")
    else:
        out.write(f"series     {fmt(rep['series'])}\n")
        out.write(f"prediction {fmt(rep['prediction'])}\n")
        out.write(f"multisum   {'n/a' if multi is None else fmt(multi)}\n")
        out.write(("agree" if rep["agree"] else "DISAGREE") + "\n")
    return EXIT_OK if rep["agree"] else EXIT_FAIL


# ---------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qpp", description="Exact q-series identity checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--order", type=_positive, default=None, help="truncation order (default 40 or $QPP_DEFAULT_ORDER)")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    v = sub.add_parser("verify", help="run identity checks")
    common(v)
    v.add_argument("--id", dest="ids", action="append", help="check id (repeatable)")

    s = sub.add_parser("series", help="print a series expansion")
    common(s)
    s.add_argument("series", nargs="?", help="series name, e.g. euler or eta:1^4,2^-2")
    s.add_argument("--name", default=None)

    t = sub.add_parser("ntable", help="dump N(r,s,m,n) counts")
    common(t)
    t.add_argument("--n", dest="max_n", type=int, default=8)
    t.add_argument("--force", action="store_true", help="allow --n above the enumeration guard")

    c = sub.add_parser("coeff", help="one coefficient of (q)_inf times the pair sum")
    common(c)
    c.add_argument("--m", type=int, default=None)
    c.add_argument("--n", type=int, default=None)
    return p


COMMANDS = {"verify": cmd_verify, "series": cmd_series, "ntable": cmd_ntable, "coeff": cmd_coeff}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if args.order is None:
            args.order = default_order()
        return COMMANDS[args.command](args, out)
    except (UsageError, UnknownCheckId, UnknownSeriesName, EnumerationBudgetExceeded) as e:
        msg = e.args[0] if e.args else type(e).__name__
        print(f"qpp: error: {type(e).__name__}: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001 - the CLI contract maps anything else to 3
        print(f"qpp: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

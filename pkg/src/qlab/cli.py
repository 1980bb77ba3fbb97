"""Command-line front end.

Subcommands:

* ``compute`` -- evaluate a named series and print an exponent/coefficient
  table (exact rationals, rendered as ``p/q`` strings, integers without the
  slash).
* ``verify`` -- check one identity row, one identity, the whole catalog
  (``all``), or the pure-oracle equality ``thm-1.2-combinatorial``; writes a
  report array.  Exit code 0 means everything passed, 1 means a mismatch,
  2 means a usage error.
* ``stats`` -- dump the enumeration-oracle table next to the matching series
  coefficients with a match flag per column.
* ``list`` -- print the identity catalog.

``QLAB_ORDER_DEFAULT`` overrides the default truncation order.  Output is
deterministic: rows are sorted before they are written.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import partitions as pt
from . import qfunctions as qf
from . import registry as rg
from .qfunctions import Monomial
from .series import LaurentSeries, SeriesError, TruncationStall

USAGE_ERROR = 2
MISMATCH_ERROR = 1


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _default_order() -> int:
    env = os.environ.get("QLAB_ORDER_DEFAULT")
    if env is None:
        return 100
    try:
        value = int(env)
    except ValueError:
        raise SystemExit(f"QLAB_ORDER_DEFAULT must be an integer, got {env!r}")
    if value < 1:
        raise SystemExit("QLAB_ORDER_DEFAULT must be positive")
    return value


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv(rows: List[Sequence[object]], header: Sequence[str]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join("" if v is None else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _json(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ----------------------------------------------------------------------
# compute


def _parse_params(pairs: List[str]) -> Dict[str, Monomial]:
    params: Dict[str, Monomial] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"--param expects name=value, got {pair!r}")
        key, _, value = pair.partition("=")
        params[key.strip()] = Monomial.parse(value)
    return params


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        params = _parse_params(args.param)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        series = qf.build(args.name, args.order, params or None, form=args.form)
    except (qf.UnknownName, qf.MissingParameter, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SeriesError as exc:
        print(f"builder failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return MISMATCH_ERROR
    rows = [
        (k, format_rational(series.coefficient(k)))
        for k in range(series.min_exp, args.order)
    ]
    if args.format == "json":
        _write(_json([{"exponent": k, "coefficient": c} for k, c in rows]), args.output)
    else:
        _write(_csv(rows, ("exponent", "coefficient")), args.output)
    return 0


# ----------------------------------------------------------------------
# verify


def _report_dict(r: rg.VerificationReport) -> dict:
    mismatch = None
    if r.first_mismatch is not None:
        mismatch = {
            "exponent": r.first_mismatch.exponent,
            "lhs": format_rational(r.first_mismatch.lhs),
            "rhs": format_rational(r.first_mismatch.rhs),
        }
    return {
        "id": r.id,
        "specialization": r.specialization,
        "order": r.order,
        "pass": r.passed,
        "first_mismatch": mismatch,
        "elapsed_ms": round(r.elapsed_ms, 3),
    }


def _report_csv_row(r: rg.VerificationReport) -> tuple:
    m = r.first_mismatch
    return (
        r.id,
        r.specialization or "",
        r.order,
        str(r.passed).lower(),
        m.exponent if m else None,
        format_rational(m.lhs) if m else None,
        format_rational(m.rhs) if m else None,
        round(r.elapsed_ms, 3),
    )


_REPORT_HEADER = (
    "id",
    "specialization",
    "order",
    "pass",
    "mismatch_exponent",
    "mismatch_lhs",
    "mismatch_rhs",
    "elapsed_ms",
)


def _verify_combinatorial(max_n: int) -> rg.VerificationReport:
    """Pure oracle check: the two-color count equals the positive-odd-rank count."""
    import time

    start = time.perf_counter()
    mismatch = None
    for n in range(1, max_n + 1):
        g = pt.count_G(n)
        r = pt.rank_stats(n).odd_positive
        if g != r:
            mismatch = rg.Mismatch(n, Fraction(g), Fraction(r))
            break
    return rg.VerificationReport(
        id="thm-1.2-combinatorial",
        specialization=None,
        order=max_n,
        passed=mismatch is None,
        first_mismatch=mismatch,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    selector = args.selector
    if selector == "all":
        reports = rg.verify_all(order=args.order, jobs=args.jobs)
    elif selector == "thm-1.2-combinatorial":
        if args.max_n > pt.DEFAULT_CAP:
            print(f"error: --max-n beyond enumeration cap {pt.DEFAULT_CAP}", file=sys.stderr)
            return USAGE_ERROR
        reports = [_verify_combinatorial(args.max_n)]
    else:
        entry_id, _, label = selector.partition("@")
        try:
            entry = rg.get_entry(entry_id)
            if label:
                reports = [rg.verify(entry_id, label, args.order)]
            else:
                order = args.order
                reports = [
                    rg.verify(entry_id, spec.label,
                              order if order is not None else entry.default_order)
                    for spec in entry.specializations
                ]
        except (rg.UnknownIdentity, rg.UnknownSpecialization) as exc:
            print(f"error: unknown identity selector: {exc}", file=sys.stderr)
            return USAGE_ERROR
        except TruncationStall as exc:
            print(f"error: unexpected divergence: {exc}", file=sys.stderr)
            return MISMATCH_ERROR
        reports.sort(key=lambda r: (r.id, r.specialization or ""))
    if args.format == "json":
        _write(_json([_report_dict(r) for r in reports]), args.report)
    else:
        _write(_csv([_report_csv_row(r) for r in reports], _REPORT_HEADER), args.report)
    return 0 if all(r.passed for r in reports) else MISMATCH_ERROR


# ----------------------------------------------------------------------
# stats


_STAT_COLUMNS = ("p", "N_e", "N_o", "N_o_plus", "G", "G_prime", "spt", "sptG", "omega")


def _series_columns(order: int) -> Dict[str, LaurentSeries]:
    euler = qf.build("euler_inverse", order)
    f3 = qf.build("f3_def", order)
    return {
        "p": euler,
        "N_e": qf.build("Ne_series_rhs", order),
        "N_o": euler.sub(f3).scale(Fraction(1, 2)),
        "N_o_plus": qf.build("No_plus_series", order),
        "G": qf.build("G_series", order),
        "G_prime": qf.build("Gprime_series", order),
        "spt": qf.build("spt_lhs", order),
        "sptG": qf.build("sptG_lhs", order),
        "omega": qf.build("omega3_def", order).shift(1),
    }


def _oracle_columns(row: pt.StatRow) -> Dict[str, int]:
    return {
        "p": row.p,
        "N_e": row.even_rank,
        "N_o": row.odd_rank,
        "N_o_plus": row.odd_positive_rank,
        "G": row.two_color,
        "G_prime": row.two_color_odd,
        "spt": row.spt,
        "sptG": row.spt_two_color,
        "omega": row.odd_part_bounded,
    }


def _stat_rows(max_n: int, jobs: int) -> List[dict]:
    if jobs > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            oracle_rows = list(pool.map(pt.stat_row, range(1, max_n + 1)))
    else:
        oracle_rows = [pt.stat_row(n) for n in range(1, max_n + 1)]
    series = _series_columns(max_n + 1)
    out = []
    for row in oracle_rows:
        oracle = _oracle_columns(row)
        flat: dict = {"n": row.n}
        for col in _STAT_COLUMNS:
            sval = series[col].coefficient(row.n)
            flat[col] = str(oracle[col])
            flat[f"{col}_series"] = format_rational(sval)
            flat[f"{col}_match"] = sval == oracle[col]
        out.append(flat)
    return out


def cmd_stats(args: argparse.Namespace) -> int:
    if args.max_n > pt.DEFAULT_CAP:
        print(f"error: --max-n beyond enumeration cap {pt.DEFAULT_CAP}", file=sys.stderr)
        return USAGE_ERROR
    rows = _stat_rows(args.max_n, args.jobs)
    header = ["n"]
    for col in _STAT_COLUMNS:
        header.extend((col, f"{col}_series", f"{col}_match"))
    if args.format == "json":
        _write(_json(rows), args.output)
    else:
        csv_rows = [
            [row["n"]]
            + [
                str(row[key]).lower() if key.endswith("_match") else row[key]
                for col in _STAT_COLUMNS
                for key in (col, f"{col}_series", f"{col}_match")
            ]
            for row in rows
        ]
        _write(_csv(csv_rows, header), args.output)
    ok = all(row[f"{col}_match"] for row in rows for col in _STAT_COLUMNS)
    return 0 if ok else MISMATCH_ERROR


# ----------------------------------------------------------------------
# list


def cmd_list(args: argparse.Namespace) -> int:
    rows = []
    for entry in rg.catalog():
        for spec in entry.specializations:
            rows.append(
                {
                    "id": entry.id,
                    "specialization": spec.label,
                    "row": entry.id if spec.label is None else f"{entry.id}@{spec.label}",
                    "order": entry.default_order,
                    "expects_stall": spec.expects_stall,
                    "anchor": entry.anchor,
                }
            )
    if args.format == "json":
        _write(_json(rows), args.output)
    elif args.format == "csv":
        csv_rows = [
            (r["row"], r["order"], str(r["expects_stall"]).lower(), r["anchor"])
            for r in rows
        ]
        _write(_csv(csv_rows, ("row", "order", "expects_stall", "anchor")), args.output)
    else:
        lines = [
            f"{r['row']:<34} order={r['order']:<4}"
            f"{' [expects stall]' if r['expects_stall'] else ''}  {r['anchor']}"
            for r in rows
        ]
        _write("\n".join(lines) + "\n", args.output)
    return 0


# ----------------------------------------------------------------------
# argument parsing


def _add_common_output(p: argparse.ArgumentParser, dest: str = "output") -> None:
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument(f"--{dest}", default=None, help="write to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlab",
        description="Exact q-series laboratory: compute series, verify identities, "
        "cross-check against brute-force partition enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_order = _default_order()
    cpus = os.cpu_count() or 1

    p = sub.add_parser("compute", help="evaluate a named series")
    p.add_argument("name")
    p.add_argument("--order", type=int, default=default_order)
    p.add_argument("--form", type=int, default=0, help="builder form index")
    p.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=MONOMIAL",
        help="monomial parameter, e.g. b=q^2 (repeatable)",
    )
    _add_common_output(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="verify identities")
    p.add_argument("selector", help="'all', an id, id@specialization, or thm-1.2-combinatorial")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--max-n", type=int, default=40, dest="max_n")
    p.add_argument("--jobs", type=int, default=cpus)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--report", default=None, help="write the report to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="oracle table with series cross-checks")
    p.add_argument("--max-n", type=int, default=20, dest="max_n")
    p.add_argument("--jobs", type=int, default=cpus)
    _add_common_output(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("list", help="print the identity catalog")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_list)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", 1) is not None and getattr(args, "order", 1) < 1:
        parser.error("--order must be positive")
    if getattr(args, "max_n", 1) < 1:
        parser.error("--max-n must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

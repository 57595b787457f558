"""Command-line front end: counts, growth constants, tables, verification.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Area caps can be raised with ``CHEESYHEX_BRUTE_MAX_AREA`` and
``CHEESYHEX_DP_MAX_AREA``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import mpmath

from . import reference as ref
from .asymptotics import NoDominantSingularity, asymptotic_form, find_roots
from .classify import ClassId, Kind
from .enumeration import HARD_MAX_AREA, SOFT_MAX_AREA, count_class, members, write_figures
from .series import paper_gf, series_expand
from .transfer import Cls, count_blocks, fitted_gf, transfer_table
from .verify import SUITES, run_suite

CLASSES = {
    "cc": Kind.COLUMN_CONVEX,
    "cheesy": Kind.CHEESY,
    "bird": Kind.BIRD,
    "blocks": Kind.CHEESY_BLOCKS,
    "incomplete": Kind.INCOMPLETE_CHEESY_BLOCKS,
}
DP_CLASSES = {"cc", "cheesy", "blocks", "incomplete"}


class UsageError(ValueError):
    pass


def _cap(var: str, default: int, ceiling: int | None = None) -> int:
    raw = os.environ.get(var)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{var} must be an integer, got {raw!r}") from None
    return min(value, ceiling) if ceiling is not None else value


def _emit(rows: list[dict], fmt: str, meta: dict | None = None) -> str:
    """Render rows as CSV or JSON; every value is already a string."""
    if fmt == "json":
        doc = dict(meta or {})
        doc["rows"] = rows
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _counts(cls_name: str, level: int, n: int, method: str, figures_to=None) -> list[int]:
    kind = CLASSES[cls_name]
    if kind is Kind.COLUMN_CONVEX:
        level = 0
    if method == "gf":
        if kind is not Kind.CHEESY_BLOCKS or level not in (1, 2, 3):
            raise UsageError("--method gf needs --class blocks and --level 1, 2 or 3")
        return series_expand(paper_gf(level), n)[1:]
    if method == "dp":
        if cls_name not in DP_CLASSES:
            raise UsageError(f"--method dp does not support --class {cls_name}")
        cap = _cap("CHEESYHEX_DP_MAX_AREA", 200)
        if n > cap:
            raise UsageError(f"--max-area {n} exceeds the dp cap {cap} (CHEESYHEX_DP_MAX_AREA)")
        rule = "cheesy" if kind is Kind.CHEESY else "blocks"
        t = transfer_table(level, n, rule)
        return t.totals(Cls.V if kind is Kind.INCOMPLETE_CHEESY_BLOCKS else Cls.U)[1:]
    cap = _cap("CHEESYHEX_BRUTE_MAX_AREA", SOFT_MAX_AREA, HARD_MAX_AREA)
    if n > cap:
        raise UsageError(f"--max-area {n} exceeds the brute-force cap {cap} (CHEESYHEX_BRUTE_MAX_AREA)")
    cid = ClassId(kind, level)
    out = []
    for area in range(1, n + 1):
        if figures_to is not None:
            out.append(write_figures(members(cid, area), figures_to))
        else:
            out.append(count_class(cid, area))
    return out


def cmd_count(args) -> int:
    if args.max_area < 1:
        raise UsageError("--max-area must be at least 1")
    if args.level < 0:
        raise UsageError("--level must be non-negative")
    if args.emit_figures and args.method != "brute":
        raise UsageError("--emit-figures needs --method brute")
    if args.emit_figures:
        with open(args.emit_figures, "w") as fh:
            counts = _counts(args.cls, args.level, args.max_area, args.method, fh)
    else:
        counts = _counts(args.cls, args.level, args.max_area, args.method)
    rows = [{"area": str(n), "count": str(c)} for n, c in enumerate(counts, start=1)]
    level = 0 if args.cls == "cc" else args.level
    meta = {"class": args.cls, "level": level, "method": args.method}
    sys.stdout.write(_emit(rows, args.output, meta))
    return 0


def _gf_for_level(level: int):
    if level in (1, 2, 3):
        return paper_gf(level), "closed form"
    if level == 0:
        return fitted_gf(0), "fitted to transfer counts"
    raise UsageError(f"growth is available for levels 0 to 3, not {level}")


def growth_record(level: int, precision: int = 30) -> dict:
    f, source = _gf_for_level(level)
    form = asymptotic_form(f, precision)
    roots = find_roots(f.den, precision)
    with mpmath.workdps(precision + 10):
        margin = abs(roots.roots[1]) / abs(roots.roots[0]) - 1 if len(roots) > 1 else mpmath.inf
    return {
        "level": str(level),
        "growth": f"{float(form.growth):.6f}",
        "amplitude": f"{float(form.amplitude):.6f}",
        "dominant_root": f"{float(form.rho):.6f}",
        "margin": f"{float(margin):.6f}",
        "source": source,
    }


def cmd_growth(args) -> int:
    if args.precision < 10:
        raise UsageError("--precision must be at least 10")
    levels = [args.level] if args.level is not None else [1, 2, 3]
    rows = [growth_record(m, args.precision) for m in levels]
    sys.stdout.write(_emit(rows, args.output, {"precision": args.precision}))
    return 0


def cmd_verify(args) -> int:
    try:
        reports = run_suite(args.suite)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    ok = all(r.ok for r in reports)
    if args.output == "json":
        doc = [
            {"suite": r.suite, "ok": r.ok, "checks": [vars(c) for c in r.checks]}
            for r in reports
        ]
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in reports:
            sys.stdout.write("\n".join(r.lines()) + "\n")
    return 0 if ok else 1


def table1_rows(max_area: int = 12) -> list[dict]:
    cols = {m: count_blocks(m, max_area).counts for m in range(4)}
    return [
        {"area": str(n), "cc": str(cols[0][n]), "level1": str(cols[1][n]),
         "level2": str(cols[2][n]), "level3": str(cols[3][n])}
        for n in range(1, max_area + 1)
    ]


def table2_rows(precision: int = 30) -> list[dict]:
    rows = []
    for m in range(4):
        blocks = growth_record(m, precision)["growth"]
        if m == 0:
            cheesy, source = blocks, "computed (column-convex)"
        else:
            cheesy, source = f"{ref.CHEESY_GROWTH[m]:.6f}", ref.EXTERNAL
        rows.append({"level": str(m), "blocks": blocks, "cheesy": cheesy, "cheesy_source": source})
    return rows


def cmd_table(args) -> int:
    rows = table1_rows() if args.which == 1 else table2_rows()
    sys.stdout.write(_emit(rows, args.output, {"table": args.which}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cheesyhex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="exact counts per area")
    c.add_argument("--class", dest="cls", choices=sorted(CLASSES), default="blocks")
    c.add_argument("--level", type=int, default=1)
    c.add_argument("--max-area", type=int, default=12)
    c.add_argument("--method", choices=("dp", "brute", "gf"), default="dp")
    c.add_argument("--output", choices=("csv", "json"), default="csv")
    c.add_argument("--emit-figures", metavar="FILE", help="write brute-force members, one per line")
    c.set_defaults(func=cmd_count)

    g = sub.add_parser("growth", help="growth constant and amplitude")
    g.add_argument("--level", type=int)
    g.add_argument("--precision", type=int, default=30)
    g.add_argument("--output", choices=("csv", "json"), default="csv")
    g.set_defaults(func=cmd_growth)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    v.add_argument("--output", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="reproduce a reference table")
    t.add_argument("which", type=int, choices=(1, 2))
    t.add_argument("--output", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NoDominantSingularity) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

"""Named verification suites; each returns a report of individual checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import reference as ref
from .asymptotics import asymptotic_check, asymptotic_form, extrapolate_growth, find_roots
from .classify import ClassId, Kind
from .enumeration import count_classes, members
from .hexgrid import cells_of, reflect
from .series import paper_gf, series_expand, solve_level1
from .transfer import (
    Cls,
    check_level1_equations,
    check_level2_equations,
    count_blocks,
    count_cheesy,
    fitted_gf,
    statistics_series,
    transfer_table,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def lines(self) -> list[str]:
        out = [f"{'PASS' if c.ok else 'FAIL'}  {self.suite}: {c.name}" + (f"  ({c.detail})" if c.detail else "")
               for c in self.checks]
        passed = sum(c.ok for c in self.checks)
        out.append(f"{self.suite}: {passed}/{len(self.checks)} checks passed in {self.seconds:.1f}s")
        return out


def suite_table1(report: SuiteReport, max_area: int = 12) -> None:
    matched = total = 0
    for m, published in ref.TABLE1.items():
        got = count_blocks(m, max_area).counts[1:]
        for n, (a, b) in enumerate(zip(got, published[:max_area]), start=1):
            total += 1
            matched += a == b
            if a != b:
                report.add(f"level {m} area {n}", False, f"computed {a}, published {b}")
    report.add("table 1 entries", matched == total, f"{matched}/{total} entries matched")


def suite_gf_cross(report: SuiteReport, order: int = 30) -> None:
    for level in (1, 2, 3):
        dp = count_blocks(level, order).counts
        gf = series_expand(paper_gf(level), order)
        bad = [n for n in range(order + 1) if dp[n] != gf[n]]
        report.add(f"level {level} closed form vs counts to order {order}", not bad,
                   f"first mismatch at {bad[0]}" if bad else "")


def suite_oracle(report: SuiteReport, max_area: int = 9) -> None:
    levels = (0, 1, 2, 3)
    classes = [ClassId(Kind.CHEESY_BLOCKS, m) for m in levels]
    classes += [ClassId(Kind.INCOMPLETE_CHEESY_BLOCKS, m) for m in levels]
    tables = {m: transfer_table(m, max_area) for m in levels}
    for n in range(1, max_area + 1):
        brute = count_classes(classes, n)
        for cid in classes:
            t = tables[cid.m]
            cls = Cls.U if cid.kind is Kind.CHEESY_BLOCKS else Cls.V
            dp = t.totals(cls)[n]
            report.add(f"{cid} area {n}", brute[cid] == dp, f"brute {brute[cid]}, dp {dp}")


def suite_eq1(report: SuiteReport, order: int = 20) -> None:
    r = check_level1_equations(order)
    report.add(f"level 1 equations hold to order {order}", r.ok, str(r.failures) if not r.ok else "")
    solved = solve_level1()
    report.add("solved E1 equals the closed form", solved["E1"] == paper_gf(1), str(solved["E1"]))
    v = transfer_table(1, order).totals(Cls.V)
    report.add(f"solved G matches incomplete counts to order {order}",
               series_expand(solved["G"], order) == v)
    stats = statistics_series(1, order)
    faulty = dict(stats, G=list(stats["G"]))
    faulty["G"][5] += 1
    bad = check_level1_equations(order, faulty)
    report.add("fault in G at q^5 is detected", bad.first_failure("G") == 5,
               f"first failure at order {bad.first_failure('G')}")


def suite_eq2(report: SuiteReport, order: int = 20) -> None:
    r = check_level2_equations(order)
    report.add(f"level 2 equations hold to order {order}", r.ok, str(r.failures) if not r.ok else "")
    stats = statistics_series(2, order)
    for name, k in (("E0", 7), ("C1", 6), ("D1", 9), ("F0", 8)):
        faulty = dict(stats, **{name: list(stats[name])})
        faulty[name][k] += 1
        bad = check_level2_equations(order, faulty)
        report.add(f"fault in {name} at q^{k} is detected", not bad.ok)


def suite_reflection(report: SuiteReport, max_area: int = 8, m: int = 1) -> None:
    cid = ClassId(Kind.CHEESY_BLOCKS, m)
    for n in range(1, max_area + 1):
        figs = {cells_of(c) for c in members(cid, n)}
        images = {reflect(f) for f in figs}
        back = all(reflect(g) == f for f, g in zip(figs, map(reflect, figs)))
        ok = images == figs and back
        report.add(f"{cid} area {n}: reflection permutes {len(figs)} members", ok)


def _close(a, b, tol):
    return abs(a - b) <= tol


def suite_asymptotics(report: SuiteReport, precision: int = 30) -> None:
    tol = 1e-6
    for level in (1, 2, 3):
        form = asymptotic_form(paper_gf(level), precision)
        g, c = float(form.growth), float(form.amplitude)
        report.add(f"level {level} growth {ref.BLOCKS_GROWTH[level]}", _close(g, ref.BLOCKS_GROWTH[level], tol),
                   f"{g:.9f}")
        report.add(f"level {level} amplitude {ref.BLOCKS_AMPLITUDE[level]}",
                   _close(c, ref.BLOCKS_AMPLITUDE[level], tol), f"{c:.9f}")
    roots = find_roots(paper_gf(1).den, precision).as_complex()
    unmatched = [z for z in ref.LEVEL1_ROOTS if not any(abs(z - r) <= 1e-6 for r in roots)]
    report.add("level 1 denominator roots", not unmatched and len(roots) == 6,
               f"unmatched {unmatched}" if unmatched else "")
    a40 = series_expand(paper_gf(1), 40)[40]
    err = abs(a40 / (ref.BLOCKS_AMPLITUDE[1] * ref.BLOCKS_GROWTH[1] ** 40) - 1)
    report.add("level 1 a_40 against the rounded asymptotic form", err < 1e-3, f"relative error {err:.2e}")
    exact_err = asymptotic_check(asymptotic_form(paper_gf(1), precision), 40, a40)
    report.add("level 1 a_40 against the exact asymptotic form", exact_err < 1e-9, f"relative error {exact_err:.2e}")
    f0 = fitted_gf(0)
    g0 = float(asymptotic_form(f0, precision).growth) if f0 is not None else float("nan")
    report.add("level 0 growth from fitted counts", _close(g0, ref.BLOCKS_GROWTH[0], tol), f"{g0:.9f}")


def suite_cheesy(report: SuiteReport, n: int = 101) -> None:
    c = count_cheesy(1, n)
    ratio = c[n] / c[n - 1]
    report.add(f"cheesy level 1 ratio a_{n}/a_{n - 1}", abs(ratio - ref.CHEESY_GROWTH[1]) < 1e-2, f"{ratio:.6f}")


def suite_extrapolate(report: SuiteReport) -> None:
    blocks = [ref.BLOCKS_GROWTH[m] for m in range(4)]
    cheesy = [ref.CHEESY_GROWTH[m] for m in range(4)]
    b = extrapolate_growth(blocks)
    c = extrapolate_growth(cheesy)
    report.add("blocks limit 4.590", _close(b, ref.EXTRAPOLATED_BLOCKS, 5e-4), f"{b:.4f}")
    report.add("cheesy limit 4.346", _close(c, ref.EXTRAPOLATED_CHEESY, 5e-4), f"{c:.4f}")


SUITES = {
    "table1": suite_table1,
    "gf-cross": suite_gf_cross,
    "oracle": suite_oracle,
    "eq1": suite_eq1,
    "eq2": suite_eq2,
    "reflection": suite_reflection,
    "asymptotics": suite_asymptotics,
    "cheesy": suite_cheesy,
    "extrapolate": suite_extrapolate,
}


def run_suite(name: str, **kwargs) -> list[SuiteReport]:
    """Run one suite, or every suite for ``name == "all"``."""
    if name == "all":
        return [run_suite(s)[0] for s in SUITES]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    report = SuiteReport(name)
    t0 = time.perf_counter()
    SUITES[name](report, **kwargs)
    report.seconds = time.perf_counter() - t0
    return [report]

"""Acceptance criteria, one test each, at their stated tolerances.

Each test records a PASS/FAIL line that pytest prints in a summary
section at the end of the run.
"""

import time

import mpmath

from cheesyhex import reference as ref
from cheesyhex.asymptotics import asymptotic_form, extrapolate_growth, find_roots
from cheesyhex.classify import ClassId, Kind
from cheesyhex.enumeration import count_classes, members
from cheesyhex.hexgrid import cells_of, reflect
from cheesyhex.series import IntPolynomial, RationalFunction, paper_gf, parse_polynomial, series_expand, solve_level1
from cheesyhex.transfer import (
    Cls,
    check_level1_equations,
    check_level2_equations,
    count_blocks,
    count_cheesy,
    statistics_series,
    transfer_table,
)

LEVELS = (0, 1, 2, 3)


def test_01_table1_exact(acceptance_line):
    t0 = time.perf_counter()
    mismatches = []
    for m in LEVELS:
        got = count_blocks(m, 12).counts[1:]
        mismatches += [(m, n + 1) for n, (a, b) in enumerate(zip(got, ref.TABLE1[m])) if a != b]
    elapsed = time.perf_counter() - t0
    entries = sum(len(v) for v in ref.TABLE1.values())
    ok = not mismatches and entries == 48 and elapsed < 60
    acceptance_line("1 table 1 reproduced", ok, f"{entries - len(mismatches)}/48 in {elapsed:.2f}s")
    assert ok, mismatches


def test_02_oracle_equivalence(acceptance_line):
    t0 = time.perf_counter()
    classes = [ClassId(k, m) for k in (Kind.CHEESY_BLOCKS, Kind.INCOMPLETE_CHEESY_BLOCKS) for m in LEVELS]
    tables = {m: transfer_table(m, 9) for m in LEVELS}
    bad = []
    for n in range(1, 10):
        brute = count_classes(classes, n)
        for cid in classes:
            cls = Cls.U if cid.kind is Kind.CHEESY_BLOCKS else Cls.V
            if brute[cid] != tables[cid.m].totals(cls)[n]:
                bad.append((str(cid), n))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    acceptance_line("2 brute force equals transfer counts, areas 1-9", ok, f"{72 - len(bad)}/72 in {elapsed:.0f}s")
    assert ok, bad


def test_03_gf_cross_check(acceptance_line):
    bad = []
    for level in (1, 2, 3):
        if series_expand(paper_gf(level), 30) != count_blocks(level, 30).counts:
            bad.append(level)
    acceptance_line("3 closed forms expand to transfer counts through order 30", not bad)
    assert not bad


def test_04_symbolic_solve(acceptance_line):
    solved = solve_level1()
    target = RationalFunction(
        IntPolynomial([0, 1]) * parse_polynomial("1-6q+11q^2-6q^3+2q^4"),
        parse_polynomial("1-9q+27q^2-32q^3+13q^4-3q^5-q^6"),
    )
    e1_ok = solved["E1"] == target
    g_ok = series_expand(solved["G"], 20) == transfer_table(1, 20).totals(Cls.V)
    acceptance_line("4 solved E1 equals the closed form, solved G matches V totals", e1_ok and g_ok)
    assert e1_ok and g_ok


def test_05_functional_equations(acceptance_line):
    r1 = check_level1_equations(20)
    r2 = check_level2_equations(20)
    s1 = statistics_series(1, 20)
    s2 = statistics_series(2, 20)
    caught = []
    for name, k in (("E1", 4), ("F1", 6), ("G", 5)):
        bad = dict(s1, **{name: list(s1[name])})
        bad[name][k] += 1
        caught.append(not check_level1_equations(20, bad).ok)
    for name, k in (("A1", 5), ("B0", 7), ("B1", 6), ("C1", 6), ("D1", 9), ("E0", 7), ("F0", 8)):
        bad = dict(s2, **{name: list(s2[name])})
        bad[name][k] -= 1
        caught.append(not check_level2_equations(20, bad).ok)
    ok = r1.ok and r2.ok and all(caught)
    acceptance_line("5 functional equations hold to order 20, faults detected", ok,
                    f"{sum(caught)}/{len(caught)} faults caught")
    assert ok


def test_06_asymptotic_constants(acceptance_line):
    tol = 1e-6
    misses = []
    for level in (1, 2, 3):
        form = asymptotic_form(paper_gf(level), 30)
        g, c = float(form.growth), float(form.amplitude)
        if abs(g - ref.BLOCKS_GROWTH[level]) > tol:
            misses.append(f"growth {level}: {g:.9f}")
        if abs(c - ref.BLOCKS_AMPLITUDE[level]) > tol:
            misses.append(f"amplitude {level}: {c:.9f} vs {ref.BLOCKS_AMPLITUDE[level]}")
    roots = find_roots(paper_gf(1).den, 30).as_complex()
    for z in ref.LEVEL1_ROOTS:
        if not any(abs(z - r) <= tol for r in roots):
            misses.append(f"root {z}")
    acceptance_line("6 growth constants, amplitudes and level 1 roots to 1e-6", not misses, "; ".join(misses))
    assert not misses


def test_07_asymptotic_consistency(acceptance_line):
    a40 = series_expand(paper_gf(1), 40)[40]
    with mpmath.workdps(40):
        err = abs(mpmath.mpf(a40) / (mpmath.mpf("0.126651") * mpmath.mpf("4.289698") ** 40) - 1)
    ok = err < 1e-3
    acceptance_line("7 level 1 a_40 within 1e-3 of the asymptotic form", ok, f"relative error {float(err):.2e}")
    assert ok


def test_08_reflection_closure(acceptance_line):
    cid = ClassId(Kind.CHEESY_BLOCKS, 1)
    bad = []
    for n in range(1, 9):
        figs = {cells_of(c) for c in members(cid, n)}
        if {reflect(f) for f in figs} != figs:
            bad.append(n)
    acceptance_line("8 reflection permutes level 1 members, areas 1-8", not bad)
    assert not bad


def test_09_extrapolation(acceptance_line):
    b = extrapolate_growth([ref.BLOCKS_GROWTH[m] for m in LEVELS])
    c = extrapolate_growth([ref.CHEESY_GROWTH[m] for m in LEVELS])
    ok = abs(b - 4.590) <= 5e-4 and abs(c - 4.346) <= 5e-4
    acceptance_line("9 extrapolated limits 4.590 and 4.346", ok, f"{b:.4f}, {c:.4f}")
    assert ok


def test_10_cheesy_ratio(acceptance_line):
    c = count_cheesy(1, 101)
    ratio = c[101] / c[100]
    ok = abs(ratio - 4.114908) < 1e-2
    acceptance_line("10 cheesy level 1 ratio a_101/a_100 near 4.114908", ok, f"{ratio:.6f}")
    assert ok

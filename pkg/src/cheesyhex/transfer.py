"""Column-by-column transfer counting.

State after each column is the shape of the last column and a class:

``U``  the figure is a polyomino with cheesy blocks of level ``m``;
``V``  it is not, but one more column on the right would make it one.

A new column is placed at every vertical offset where it touches the old
last column.  Whether the result is ``U``, ``V`` or dead depends only on
the old class, on which runs of the two columns touch, and on whether the
new column has a gap:

* from ``U``: every run of the new column touches the old one -> ``U``
  (the new column either continues a right wing or starts a fresh bird);
  a gapped new column with exactly one run touching -> ``V`` (it opens the
  left wing of the next bird, the loose run waits for the next column).
* from ``V``: every run of the old column must touch the new one, since the
  old column sits in a left wing.  A gap-free new column closes the bird
  (``U``); a gapped one extends the wing (``V``).

Offsets are measured as the bottom row of the new column with the old
column's bottom cell at row 0.  Old run ``(a, k)`` and new run ``(b, h)``
touch iff ``a - h <= b <= a + k - 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .hexgrid import ColumnShape, runs_touch
from .series import LEVEL1_EQUATIONS, LEVEL2_EQUATIONS, Equation, IntPolynomial, guess_rational


class Cls(enum.Enum):
    U = "U"
    V = "V"
    INVALID = "invalid"


class ContactProfile(NamedTuple):
    old_touching: frozenset  # subset of {"lower", "upper"}
    new_touching: frozenset


_NAMES = ("lower", "upper")


def placements(old: ColumnShape, new: ColumnShape) -> list[tuple[int, ContactProfile]]:
    """Every offset of ``new`` right of ``old`` with at least one contact."""
    old_runs = old.runs(0)
    out = []
    for b in range(-new.height, old.height):
        new_runs = new.runs(b)
        old_hit, new_hit = set(), set()
        for i, o in enumerate(old_runs):
            for j, r in enumerate(new_runs):
                if runs_touch(o, r):
                    old_hit.add(_NAMES[i])
                    new_hit.add(_NAMES[j])
        if old_hit:
            out.append((b, ContactProfile(frozenset(old_hit), frozenset(new_hit))))
    return out


def classify_transition(
    old_cls: Cls, profile: ContactProfile, new: ColumnShape, old: ColumnShape | None = None
) -> Cls:
    """Class of the figure after appending ``new``.

    ``old`` is needed only to know how many runs the old column has when
    coming from ``V``; every ``V`` state has a gapped last column, so it
    defaults to two runs.
    """
    n_new = 2 if new.has_gap else 1
    if old_cls is Cls.U:
        if len(profile.new_touching) == n_new:
            return Cls.U
        if n_new == 2 and len(profile.new_touching) == 1:
            return Cls.V
        return Cls.INVALID
    if old_cls is Cls.V:
        n_old = 2 if old is None or old.has_gap else 1
        if len(profile.old_touching) < n_old:
            return Cls.INVALID
        return Cls.V if new.has_gap else Cls.U
    return Cls.INVALID


def transition_weights(old: ColumnShape, new: ColumnShape) -> dict[tuple[Cls, Cls], int]:
    """Number of offsets taking ``(old, from)`` to ``(new, to)``, by scanning."""
    out: dict[tuple[Cls, Cls], int] = {}
    for _, prof in placements(old, new):
        for start in (Cls.U, Cls.V):
            if start is Cls.V and not old.has_gap:
                continue
            to = classify_transition(start, prof, new, old)
            if to is not Cls.INVALID:
                out[(start, to)] = out.get((start, to), 0) + 1
    return out


# -- vectorised offset counting ------------------------------------------------


def _weight_vectors(new: ColumnShape, L, G, U):
    """Offset counts from every old shape ``(L[i], G[i], U[i])`` to ``new``.

    Returns three integer arrays: offsets where all new runs touch, offsets
    where exactly one of two new runs touches, and offsets where all old
    runs are touched.  Each contact between an old run and a new run holds
    on an interval of offsets, so the offset line is cut at the interval
    ends and each piece is tested once.
    """
    lp, gp, up = new
    Hn = lp + gp + up
    H = L + G + U
    gapped_old = G > 0
    empty_lo, empty_hi = np.ones_like(L), np.zeros_like(L)

    # (old run, new run) -> inclusive offset interval
    ll = (np.full_like(L, -lp), L - 1)
    ul = (np.where(gapped_old, L + G - lp, empty_lo), np.where(gapped_old, H - 1, empty_hi))
    if gp:
        lu = (np.full_like(L, -Hn), L - 1 - lp - gp)
        uu = (
            np.where(gapped_old, L + G - Hn, empty_lo),
            np.where(gapped_old, H - 1 - lp - gp, empty_hi),
        )
    else:
        lu = uu = (empty_lo, empty_hi)
    ivs = (ll, ul, lu, uu)
    cuts = np.sort(np.stack([x for lo, hi in ivs for x in (lo, hi + 1)], axis=1), axis=1)

    all_new = np.zeros_like(L)
    one_new = np.zeros_like(L)
    all_old = np.zeros_like(L)
    for j in range(cuts.shape[1] - 1):
        at = cuts[:, j]
        width = cuts[:, j + 1] - at
        t_ll, t_ul, t_lu, t_uu = ((lo <= at) & (at <= hi) for lo, hi in ivs)
        new_low = t_ll | t_ul
        new_up = t_lu | t_uu
        old_low = t_ll | t_lu
        old_up = t_ul | t_uu
        if gp:
            all_new += width * (new_low & new_up)
            one_new += width * (new_low ^ new_up)
        else:
            all_new += width * new_low
        all_old += width * (old_low & (old_up | ~gapped_old))
    return all_new, one_new, all_old


@dataclass
class StateTable:
    """Exact counts per area and last-column shape, for classes U and V."""

    m: int
    n_max: int
    rule: str
    shapes: list[ColumnShape]
    u: list  # u[area] -> object array over shapes
    v: list
    index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self.index = {s: i for i, s in enumerate(self.shapes)}

    def count(self, area: int, shape: ColumnShape, cls: Cls = Cls.U) -> int:
        table = self.u if cls is Cls.U else self.v
        i = self.index.get(ColumnShape(*shape))
        return 0 if i is None else int(table[area][i])

    def items(self, area: int, cls: Cls = Cls.U):
        table = self.u if cls is Cls.U else self.v
        for s, c in zip(self.shapes, table[area]):
            if c:
                yield s, c

    def totals(self, cls: Cls = Cls.U) -> list[int]:
        table = self.u if cls is Cls.U else self.v
        return [int(sum(row)) for row in table]


def _shapes(m: int, n_max: int) -> list[ColumnShape]:
    out = []
    for c in range(1, n_max + 1):
        out.append(ColumnShape(c))
        for g in range(1, m + 1):
            for low in range(1, c):
                out.append(ColumnShape(low, g, c - low))
    return out


def transfer_table(m: int, n_max: int, rule: str = "blocks") -> StateTable:
    """Run the transfer counter to area ``n_max``.

    ``rule="blocks"`` counts polyominoes with cheesy blocks (classes U and
    V); ``rule="cheesy"`` counts cheesy polyominoes, where every new run
    must touch the previous column and the first column is gap-free.
    """
    if m < 0 or n_max < 1:
        raise ValueError("need m >= 0 and n_max >= 1")
    if rule not in ("blocks", "cheesy"):
        raise ValueError(f"unknown rule {rule!r}")
    shapes = _shapes(m, n_max)
    S = len(shapes)
    cells = np.array([s.cells for s in shapes])
    upto = np.searchsorted(cells, np.arange(n_max + 2), side="right")
    L = np.array([s.lower for s in shapes], dtype=np.int64)
    G = np.array([s.gap for s in shapes], dtype=np.int64)
    U = np.array([s.upper for s in shapes], dtype=np.int64)

    def zeros():
        return np.array([0] * S, dtype=object)

    fu = [zeros() for _ in range(n_max + 1)]
    fv = [zeros() for _ in range(n_max + 1)]
    for i, s in enumerate(shapes):
        if not s.has_gap:
            fu[s.cells][i] = 1
        elif rule == "blocks":
            fv[s.cells][i] = 1

    # weight rows truncated to the old shapes that can still precede them
    rows = []
    for j, s in enumerate(shapes):
        k = upto[n_max - s.cells]
        if k == 0:
            rows.append(None)
            continue
        a, o, d = _weight_vectors(s, L[:k], G[:k], U[:k])
        rows.append((a.astype(object), o.astype(object), d.astype(object)))

    for area in range(1, n_max):
        k = upto[area]
        cur_u = fu[area][:k]
        cur_v = fv[area][:k]
        has_v = rule == "blocks" and any(cur_v)
        for j in range(upto[n_max - area]):
            s = shapes[j]
            a, o, d = rows[j]
            dest = area + s.cells
            to_u = a[:k].dot(cur_u)
            if rule == "cheesy":
                fu[dest][j] += to_u
                continue
            from_v = d[:k].dot(cur_v) if has_v else 0
            if s.has_gap:
                fu[dest][j] += to_u
                fv[dest][j] += o[:k].dot(cur_u) + from_v
            else:
                fu[dest][j] += to_u + from_v
    return StateTable(m, n_max, rule, shapes, fu, fv)


def transfer_table_scan(m: int, n_max: int, rule: str = "blocks") -> StateTable:
    """Same counts as :func:`transfer_table`, straight from placement scans.

    Slow; kept as the reference the vectorised path is tested against.
    """
    shapes = _shapes(m, n_max)
    index = {s: i for i, s in enumerate(shapes)}
    fu = [[0] * len(shapes) for _ in range(n_max + 1)]
    fv = [[0] * len(shapes) for _ in range(n_max + 1)]
    for s in shapes:
        if not s.has_gap:
            fu[s.cells][index[s]] = 1
        elif rule == "blocks":
            fv[s.cells][index[s]] = 1
    for area in range(1, n_max):
        for i, old in enumerate(shapes):
            cu, cv = fu[area][i], fv[area][i]
            if not (cu or cv):
                continue
            for new in shapes:
                dest = area + new.cells
                if dest > n_max:
                    continue
                if rule == "cheesy":
                    n_all = sum(
                        1 for _, p in placements(old, new)
                        if len(p.new_touching) == (2 if new.has_gap else 1)
                    )
                    fu[dest][index[new]] += cu * n_all
                    continue
                for (start, to), w in transition_weights(old, new).items():
                    c = cu if start is Cls.U else cv
                    table = fu if to is Cls.U else fv
                    table[dest][index[new]] += c * w
    as_obj = lambda rows: [np.array(r, dtype=object) for r in rows]  # noqa: E731
    return StateTable(m, n_max, rule, shapes, as_obj(fu), as_obj(fv))


@dataclass
class CountTable:
    """Area-indexed exact counts (``counts[0]`` is the empty figure, always 0)."""

    m: int
    counts: list[int]
    incomplete: list[int] | None = None

    def __getitem__(self, n: int) -> int:
        return self.counts[n]


def count_blocks(m: int, n_max: int) -> CountTable:
    t = transfer_table(m, n_max, "blocks")
    return CountTable(m, t.totals(Cls.U), t.totals(Cls.V))


def count_cheesy(m: int, n_max: int) -> CountTable:
    t = transfer_table(m, n_max, "cheesy")
    return CountTable(m, t.totals(Cls.U))


# -- statistics and functional equations ---------------------------------------


def _stat(table: StateTable, cls: Cls, weight) -> list[int]:
    out = []
    for area in range(table.n_max + 1):
        out.append(sum(int(c) * weight(s) for s, c in table.items(area, cls)))
    return out


def statistics_series(m: int, n_max: int, table: StateTable | None = None) -> dict[str, list[int]]:
    """Per-area sums used by the level-one and level-two functional equations.

    Level 1: ``E1`` (figures), ``F1`` (summed last-column heights), ``G``
    (incomplete figures).  Level 2 splits by the gap of the last column:
    ``A*``/``B*`` gap at most 1, ``C1``..``F0`` gap 2, ``G1``..``I0``
    incomplete with gap 1, ``J1``..``L0`` incomplete with gap 2.  A trailing
    ``0`` marks a derivative at 0, which keeps only last columns whose
    height (``B0``), upper run (``E0``, ``H0``, ``K0``) or lower run
    (``F0``, ``I0``, ``L0``) is a single cell.
    """
    if m not in (1, 2):
        raise ValueError("statistics are defined for levels 1 and 2 only")
    t = table if table is not None else transfer_table(m, n_max, "blocks")
    one = lambda s: 1  # noqa: E731
    if m == 1:
        return {
            "E1": _stat(t, Cls.U, one),
            "F1": _stat(t, Cls.U, lambda s: s.height),
            "G": _stat(t, Cls.V, one),
        }

    def gap_is(g, f):
        return lambda s: f(s) if (s.gap <= 1 if g == "<=1" else s.gap == g) else 0

    return {
        "A1": _stat(t, Cls.U, gap_is("<=1", one)),
        "B0": _stat(t, Cls.U, gap_is("<=1", lambda s: int(s.height == 1))),
        "B1": _stat(t, Cls.U, gap_is("<=1", lambda s: s.height)),
        "C1": _stat(t, Cls.U, gap_is(2, one)),
        "D1": _stat(t, Cls.U, gap_is(2, lambda s: s.height)),
        "E0": _stat(t, Cls.U, gap_is(2, lambda s: int(s.upper == 1))),
        "F0": _stat(t, Cls.U, gap_is(2, lambda s: int(s.lower == 1))),
        "G1": _stat(t, Cls.V, gap_is(1, one)),
        "H0": _stat(t, Cls.V, gap_is(1, lambda s: int(s.upper == 1))),
        "I0": _stat(t, Cls.V, gap_is(1, lambda s: int(s.lower == 1))),
        "J1": _stat(t, Cls.V, gap_is(2, one)),
        "K0": _stat(t, Cls.V, gap_is(2, lambda s: int(s.upper == 1))),
        "L0": _stat(t, Cls.V, gap_is(2, lambda s: int(s.lower == 1))),
    }


@dataclass
class EquationReport:
    order: int
    failures: dict[str, list[tuple[int, int]]]  # equation -> [(order, residual)]

    @property
    def ok(self) -> bool:
        return not self.failures

    def first_failure(self, name: str) -> int | None:
        hits = self.failures.get(name)
        return hits[0][0] if hits else None


def _check(equations: tuple[Equation, ...], stats, n_max) -> EquationReport:
    failures = {}
    for eq in equations:
        res = eq.residual(stats, n_max)
        bad = [(i, r) for i, r in enumerate(res) if r != 0]
        if bad:
            failures[eq.name] = bad
    return EquationReport(n_max, failures)


def check_level1_equations(n_max: int = 20, stats: dict | None = None) -> EquationReport:
    if n_max < 5:
        raise ValueError("check at least through order 5")
    stats = stats if stats is not None else statistics_series(1, n_max)
    return _check(LEVEL1_EQUATIONS, stats, n_max)


def check_level2_equations(n_max: int = 20, stats: dict | None = None) -> EquationReport:
    if n_max < 6:
        raise ValueError("check at least through order 6")
    stats = stats if stats is not None else statistics_series(2, n_max)
    return _check(LEVEL2_EQUATIONS, stats, n_max)


def replay_figures(m: int, n: int, cls: Cls = Cls.U) -> list[tuple]:
    """Figures of area ``n`` reached by following the transfer rules explicitly.

    Each figure is returned as a column structure; used to check, for small
    ``n``, that the transitions produce each oracle figure exactly once.
    """
    out = []
    shapes = _shapes(m, n)

    def grow(cols, shape, state, area):
        if area == n:
            if state is cls:
                out.append(cols)
            return
        x, runs = cols[-1]
        bottom = runs[0][0]
        for new in shapes:
            if area + new.cells > n:
                continue
            for off, prof in placements(shape, new):
                to = classify_transition(state, prof, new, shape)
                if to is not Cls.INVALID:
                    grow(cols + ((x + 1, new.runs(bottom + off)),), new, to, area + new.cells)

    for s in shapes:
        if s.cells > n:
            continue
        start = Cls.V if s.has_gap else Cls.U
        grow(((0, s.runs(0)),), s, start, s.cells)
    return out


def fitted_gf(m: int, n_max: int = 40, rule: str = "blocks"):
    """Rational generating function guessed from the first ``n_max`` counts.

    Used for level 0, where no closed form is embedded.  Returns ``None``
    when the counts do not yet pin down a recurrence.
    """
    counts = transfer_table(m, n_max, rule).totals(Cls.U)
    f = guess_rational(counts[1:])
    return None if f is None else f * IntPolynomial([0, 1])

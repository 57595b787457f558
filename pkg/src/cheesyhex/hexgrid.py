"""Hexagonal lattice in sheared column coordinates.

A cell is an integer pair ``(x, y)``: ``x`` is the column index and ``y`` the
row within the column.  Columns are vertical stacks of hexagons; the physical
height of a cell centre is ``y + x/2``, so the two right-hand neighbours of
``(x, y)`` are ``(x+1, y)`` and ``(x+1, y-1)``.  With this convention every
column of a figure is a set of integers and every vertical run is an integer
interval.

A *run* is stored as ``(start, length)``.  A *column structure* is a tuple of
``(x, runs)`` pairs ordered by ``x`` with runs ordered bottom-up; all class
predicates work on column structures.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Iterable, NamedTuple

Cell = tuple[int, int]
Run = tuple[int, int]
Columns = tuple[tuple[int, tuple[Run, ...]], ...]

_OFFSETS = ((0, 1), (0, -1), (1, 0), (1, -1), (-1, 0), (-1, 1))


class ColumnShape(NamedTuple):
    """Shape of one column: lower run, gap, upper run (cell counts).

    A gap-free column is ``(h, 0, 0)``.
    """

    lower: int
    gap: int = 0
    upper: int = 0

    @property
    def height(self) -> int:
        return self.lower + self.gap + self.upper

    @property
    def cells(self) -> int:
        return self.lower + self.upper

    @property
    def has_gap(self) -> bool:
        return self.gap > 0

    def runs(self, bottom: int = 0) -> tuple[Run, ...]:
        """Runs of this shape with the lowest cell at row ``bottom``."""
        if self.gap == 0:
            return ((bottom, self.lower),)
        return ((bottom, self.lower), (bottom + self.lower + self.gap, self.upper))

    def validate(self) -> "ColumnShape":
        if self.lower < 1 or self.gap < 0 or self.upper < 0:
            raise ValueError(f"invalid column shape {tuple(self)}")
        if (self.gap == 0) != (self.upper == 0):
            raise ValueError(f"gap and upper run must vanish together: {tuple(self)}")
        return self

    @classmethod
    def from_runs(cls, runs: Iterable[Run]) -> "ColumnShape":
        runs = list(runs)
        if len(runs) == 1:
            return cls(runs[0][1])
        if len(runs) == 2:
            (a, k), (b, h) = runs
            return cls(k, b - a - k, h)
        raise ValueError(f"a column shape has one or two runs, got {len(runs)}")


def neighbors(c: Cell) -> set[Cell]:
    x, y = c
    return {(x + dx, y + dy) for dx, dy in _OFFSETS}


def normalize(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Translate so that the lowest cell of the leftmost column is ``(0, 0)``."""
    cells = list(cells)
    if not cells:
        return frozenset()
    x0 = min(x for x, _ in cells)
    y0 = min(y for x, y in cells if x == x0)
    return frozenset((x - x0, y - y0) for x, y in cells)


def runs_of(ys: Iterable[int]) -> tuple[Run, ...]:
    """Maximal runs of a set of rows, bottom-up."""
    ys = sorted(set(ys))
    runs = []
    start = prev = None
    for y in ys:
        if prev is not None and y == prev + 1:
            prev = y
            continue
        if start is not None:
            runs.append((start, prev - start + 1))
        start = prev = y
    if start is not None:
        runs.append((start, prev - start + 1))
    return tuple(runs)


def columns(cells: Iterable[Cell]) -> Columns:
    """Decompose a cell set into ``(x, runs)`` pairs, left to right."""
    by_x = defaultdict(list)
    for x, y in cells:
        by_x[x].append(y)
    if not by_x:
        raise ValueError("columns() needs a non-empty cell set")
    return tuple((x, runs_of(by_x[x])) for x in sorted(by_x))


def cells_of(cols: Columns) -> frozenset[Cell]:
    return frozenset(
        (x, y) for x, runs in cols for start, length in runs for y in range(start, start + length)
    )


def is_connected(cells: Iterable[Cell]) -> bool:
    cells = set(cells)
    if not cells:
        return True
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        for nb in neighbors(queue.popleft()):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


def reflect(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Mirror about a vertical axis: ``(x, y) -> (-x, x + y)``, normalized."""
    return normalize((-x, x + y) for x, y in cells)


def shared_edges(left: Run, right: Run) -> int:
    """Number of adjacent cell pairs between a run and a run one column right.

    Cell ``(x, y)`` touches rows ``y - 1`` and ``y`` of column ``x + 1``.
    """
    a, k = left
    b, h = right
    total = 0
    for y in range(a, a + k):
        for ny in (y - 1, y):
            if b <= ny < b + h:
                total += 1
    return total


def runs_touch(left: Run, right: Run) -> bool:
    """True when a run shares an edge with a run in the next column to the right."""
    a, k = left
    b, h = right
    # left cells reach rows [a-1, a+k-1] of the right column
    return b <= a + k - 1 and b + h - 1 >= a - 1


def format_figure(cells: Iterable[Cell]) -> str:
    """One-line text form: sorted ``x,y`` pairs separated by semicolons."""
    return ";".join(f"{x},{y}" for x, y in sorted(cells))


def parse_figure(line: str) -> frozenset[Cell]:
    line = line.strip()
    if not line:
        return frozenset()
    out = []
    for item in line.split(";"):
        x, y = item.split(",")
        out.append((int(x), int(y)))
    return frozenset(out)

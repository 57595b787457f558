"""Brute-force oracle: generate column sequences, filter by class predicates.

Figures are grown one column at a time.  The first column sits at ``x = 0``
with its lowest cell at ``y = 0``, so each translation class is produced
exactly once.  Each later column must share at least one edge with the
column before it.  That restriction loses nothing for the classes counted
here: a polyomino, or a figure that one extra column turns into a
polyomino, has contact across every pair of adjacent columns, because
hexagonal cells only touch cells in the same or an adjacent column.

Connectivity is *not* enforced during generation; incomplete figures may be
disconnected and are found by the same filter.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, TextIO

from .classify import ClassId, Kind, Profile, member_cols, profile_cols
from .hexgrid import Columns, ColumnShape, cells_of, format_figure, runs_touch

SOFT_MAX_AREA = 12
HARD_MAX_AREA = 14

_COUNTABLE = {
    Kind.COLUMN_CONVEX,
    Kind.CHEESY,
    Kind.BIRD,
    Kind.CHEESY_BLOCKS,
    Kind.INCOMPLETE_CHEESY_BLOCKS,
}


@lru_cache(maxsize=None)
def shapes_with_cells(c: int, max_gap: int) -> tuple[ColumnShape, ...]:
    """All column shapes with exactly ``c`` cells and gap at most ``max_gap``."""
    out = [ColumnShape(c)]
    for gap in range(1, max_gap + 1):
        for lower in range(1, c):
            out.append(ColumnShape(lower, gap, c - lower))
    return tuple(out)


def _placements(prev_runs, shape: ColumnShape):
    """Bottom rows at which ``shape`` touches a column with runs ``prev_runs``."""
    lo = prev_runs[0][0]
    hi = prev_runs[-1][0] + prev_runs[-1][1] - 1
    for b in range(lo - shape.height, hi + 1):
        runs = shape.runs(b)
        if any(runs_touch(p, r) for p in prev_runs for r in runs):
            yield runs


def generate(area: int, max_gap: int) -> Iterator[Columns]:
    """Yield every figure of ``area`` cells built from touching columns.

    Each column has one or two runs with a gap of at most ``max_gap``.
    The stream order is deterministic.
    """
    if area <= 0:
        raise ValueError("area must be positive")
    if max_gap < 0:
        raise ValueError("max_gap must be non-negative")
    if area > HARD_MAX_AREA:
        raise ValueError(f"brute force refuses areas above {HARD_MAX_AREA}")

    def grow(cols, left):
        if left == 0:
            yield cols
            return
        x, prev = cols[-1]
        for c in range(1, left + 1):
            for shape in shapes_with_cells(c, max_gap):
                for runs in _placements(prev, shape):
                    yield from grow(cols + ((x + 1, runs),), left - c)

    for c in range(1, area + 1):
        for shape in shapes_with_cells(c, max_gap):
            yield from grow(((0, shape.runs(0)),), area - c)


def count_class(cid: ClassId, n: int) -> int:
    """Number of ``n``-cell members of ``cid``, by exhaustive generation."""
    if cid.kind not in _COUNTABLE:
        raise ValueError(
            f"{cid} can contain columns with three or more runs; not countable here"
        )
    return count_classes([cid], n)[cid]


def count_classes(classes, n: int) -> dict[ClassId, int]:
    """Count several classes in one pass over the figures of area ``n``."""
    classes = list(classes)
    for cid in classes:
        if cid.kind not in _COUNTABLE:
            raise ValueError(f"{cid} is not countable here")
    counts = dict.fromkeys(classes, 0)
    widest = max(cid.max_gap for cid in classes)
    for cols in generate(n, widest):
        prof = profile_cols(cols)
        for cid in classes:
            if prof.max_gap <= cid.max_gap and _member(cid, cols, prof):
                counts[cid] += 1
    return counts


def _member(cid: ClassId, cols: Columns, prof: Profile) -> bool:
    kind = cid.kind
    if kind is Kind.CHEESY_BLOCKS:
        return prof.blocks
    if kind is Kind.INCOMPLETE_CHEESY_BLOCKS:
        return prof.completable and not prof.blocks
    if kind is Kind.COLUMN_CONVEX:
        return prof.connected
    if kind is Kind.CHEESY:
        return prof.cheesy
    return member_cols(cid, cols)


def members(cid: ClassId, n: int) -> Iterator[Columns]:
    """Stream the ``n``-cell members of ``cid`` as column structures."""
    if cid.kind not in _COUNTABLE:
        raise ValueError(f"{cid} is not enumerable here")
    for cols in generate(n, cid.max_gap):
        prof = profile_cols(cols)
        if prof.max_gap <= cid.max_gap and _member(cid, cols, prof):
            yield cols


def write_figures(figures, out: TextIO) -> int:
    """Write one figure per line as ``x,y;x,y;...``; return the line count."""
    n = 0
    for cols in figures:
        out.write(format_figure(cells_of(cols)) + "\n")
        n += 1
    return n

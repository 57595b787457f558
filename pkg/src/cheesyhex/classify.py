"""Membership tests for the polyomino classes built from nearly convex columns.

Every predicate has two forms: a public one taking a cell set, and a
``*_cols`` form taking a column structure (see :mod:`cheesyhex.hexgrid`),
which the brute-force enumerator calls directly to skip re-decomposition.

Level ``m`` bounds the gap inside a two-run column.  Level 0 forbids gaps,
so every level-0 class coincides with the column-convex polyominoes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .hexgrid import Cell, Columns, columns, runs_touch


class Kind(enum.Enum):
    POLYOMINO = "polyomino"
    COLUMN_CONVEX = "cc"
    RIGHTWARD_SEMIDIRECTED = "rightward"
    LEFTWARD_SEMIDIRECTED = "leftward"
    CHEESY = "cheesy"
    BIRD = "bird"
    CHEESY_BLOCKS = "blocks"
    INCOMPLETE_CHEESY_BLOCKS = "incomplete"


_LEVELLED = {Kind.CHEESY, Kind.BIRD, Kind.CHEESY_BLOCKS, Kind.INCOMPLETE_CHEESY_BLOCKS}


@dataclass(frozen=True)
class ClassId:
    kind: Kind
    m: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("level must be non-negative")
        if self.kind not in _LEVELLED and self.m != 0:
            raise ValueError(f"{self.kind.value} takes no level")

    @property
    def max_gap(self) -> int:
        """Largest gap a member can contain (bounds brute-force generation)."""
        if self.kind in _LEVELLED:
            return self.m
        if self.kind is Kind.COLUMN_CONVEX:
            return 0
        return 1 << 30

    def __str__(self):
        if self.kind in _LEVELLED:
            return f"{self.kind.value}({self.m})"
        return self.kind.value


# -- column-structure helpers -------------------------------------------------


def _consecutive(cols: Columns) -> bool:
    return all(cols[i + 1][0] == cols[i][0] + 1 for i in range(len(cols) - 1))


def _gap(runs) -> int:
    if len(runs) < 2:
        return 0
    (a, k), (b, _) = runs[0], runs[1]
    return b - a - k


def columns_ok(cols: Columns, m: int) -> bool:
    """Every column has at most two runs, and any gap is at most ``m`` cells."""
    for _, runs in cols:
        if len(runs) > 2:
            return False
        if len(runs) == 2 and _gap(runs) > m:
            return False
    return True


def connected_cols(cols: Columns) -> bool:
    """Connectivity on runs: runs in adjacent columns are linked when they touch."""
    if not cols:
        return True
    if not _consecutive(cols):
        return False
    # union-find over (column index, run index)
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, (_, runs) in enumerate(cols):
        for j in range(len(runs)):
            parent[(i, j)] = (i, j)
    for i in range(len(cols) - 1):
        for j, left in enumerate(cols[i][1]):
            for k, right in enumerate(cols[i + 1][1]):
                if runs_touch(left, right):
                    ra, rb = find((i, j)), find((i + 1, k))
                    if ra != rb:
                        parent[ra] = rb
    roots = {find(a) for a in parent}
    return len(roots) == 1


def _touches_left(cols: Columns, i: int) -> bool:
    """Every run of column ``i`` shares an edge with column ``i - 1``."""
    left = cols[i - 1][1]
    return all(any(runs_touch(a, b) for a in left) for b in cols[i][1])


def _touches_right(cols: Columns, i: int) -> bool:
    """Every run of column ``i`` shares an edge with column ``i + 1``."""
    right = cols[i + 1][1]
    return all(any(runs_touch(a, b) for b in right) for a in cols[i][1])


def rightward_cols(cols: Columns, lo: int = 0, hi: int | None = None) -> bool:
    hi = len(cols) - 1 if hi is None else hi
    if len(cols[lo][1]) != 1:
        return False
    return all(_touches_left(cols, i) for i in range(lo + 1, hi + 1))


def leftward_cols(cols: Columns, lo: int = 0, hi: int | None = None) -> bool:
    hi = len(cols) - 1 if hi is None else hi
    if len(cols[hi][1]) != 1:
        return False
    return all(_touches_right(cols, i) for i in range(lo, hi))


def bird_cols(cols: Columns, lo: int = 0, hi: int | None = None) -> bool:
    """Columns ``lo..hi`` form a bird (connectivity of the slice is implied)."""
    hi = len(cols) - 1 if hi is None else hi
    solid = [i for i in range(lo, hi + 1) if len(cols[i][1]) == 1]
    if len(solid) != 1:
        return False
    a = solid[0]
    return leftward_cols(cols, lo, a) and rightward_cols(cols, a, hi)


def bird_partition_cols(cols: Columns) -> list[tuple[int, int]] | None:
    """Split the column sequence into consecutive birds, or ``None``.

    Scans split points left to right, remembering for each reachable split
    the block that reached it; the first block found wins.
    """
    n = len(cols)
    back: list[int | None] = [None] * (n + 1)
    back[0] = 0
    for end in range(n):
        for start in range(end + 1):
            if back[start] is not None and bird_cols(cols, start, end):
                back[end + 1] = start
                break
    if back[n] is None:
        return None
    blocks = []
    end = n
    while end > 0:
        start = back[end]
        blocks.append((start, end - 1))
        end = start
    return blocks[::-1]


def cheesy_cols(cols: Columns, m: int) -> bool:
    return (
        columns_ok(cols, m) and connected_cols(cols) and rightward_cols(cols)
    )


def cheesy_blocks_cols(cols: Columns, m: int) -> bool:
    return (
        columns_ok(cols, m)
        and connected_cols(cols)
        and bird_partition_cols(cols) is not None
    )


def completing_column(cols: Columns) -> tuple[int, tuple[tuple[int, int]]]:
    """The gap-free column covering every row adjacent to the last column.

    Any column that completes a figure can be replaced by this one: the only
    conditions an appended gap-free column takes part in are contact with the
    runs of the column before it (for connectivity and for the left wing of
    the final bird), and covering more rows never removes a contact.  A new
    gap-free column carries no condition of its own.
    """
    x, runs = cols[-1]
    lo = runs[0][0]
    hi = runs[-1][0] + runs[-1][1] - 1
    return (x + 1, ((lo - 1, hi - lo + 2),))


def incomplete_cheesy_blocks_cols(cols: Columns, m: int) -> bool:
    if not cols or cheesy_blocks_cols(cols, m):
        return False
    return cheesy_blocks_cols(cols + (completing_column(cols),), m)


class Profile(NamedTuple):
    max_gap: int
    connected: bool
    cheesy: bool  # rightward-semidirected polyomino
    blocks: bool  # splits into birds and is connected
    completable: bool  # blocks after appending completing_column


def profile_cols(cols: Columns) -> Profile:
    """All level-independent class facts of a figure in one pass.

    Requires at most two runs per column and consecutive columns.  Level
    membership follows by comparing ``max_gap`` with the level.
    """
    k = len(cols)
    solid = [len(r) == 1 for _, r in cols]
    max_gap = 0
    for _, r in cols:
        if len(r) == 2:
            g = r[1][0] - r[0][0] - r[0][1]
            if g > max_gap:
                max_gap = g

    # node ids: 2*i + j for run j of column i
    parent = list(range(2 * k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    left_ok = [True] * k  # every run touches the column to the left
    right_ok = [True] * k  # every run touches the column to the right
    for i in range(k - 1):
        left = cols[i][1]
        right = cols[i + 1][1]
        hit_l = [False] * len(left)
        hit_r = [False] * len(right)
        for j, (a, ka) in enumerate(left):
            for jj, (b, hb) in enumerate(right):
                if b <= a + ka - 1 and b + hb >= a:
                    hit_l[j] = True
                    hit_r[jj] = True
                    ra, rb = find(2 * i + j), find(2 * i + 2 + jj)
                    if ra != rb:
                        parent[ra] = rb
        right_ok[i] = all(hit_l)
        left_ok[i + 1] = all(hit_r)

    nodes = [2 * i + j for i in range(k) for j in range(len(cols[i][1]))]
    roots = {find(a) for a in nodes}
    connected = len(roots) == 1
    # the completing column touches every run of the last column
    sink = 2 * k
    for j in range(len(cols[-1][1])):
        ra = find(2 * (k - 1) + j)
        if ra != find(sink):
            parent[ra] = find(sink)
    connected_plus = len({find(a) for a in nodes}) == 1

    cheesy = connected and solid[0] and all(left_ok[1:])

    def bird(lo, hi):
        a = -1
        for i in range(lo, hi + 1):
            if solid[i]:
                if a >= 0:
                    return False
                a = i
        if a < 0:
            return False
        for i in range(lo, a):
            if not right_ok[i]:
                return False
        for i in range(a + 1, hi + 1):
            if not left_ok[i]:
                return False
        return True

    reach = [False] * (k + 1)
    reach[0] = True
    for end in range(k):
        for start in range(end + 1):
            if reach[start] and bird(start, end):
                reach[end + 1] = True
                break
    blocks = connected and reach[k]

    completable = False
    if connected_plus:
        # final bird = gapped columns start..k-1 plus the solid completion
        start = k
        while True:
            if reach[start]:
                completable = True
                break
            if start == 0:
                break
            i = start - 1
            if solid[i] or (i < k - 1 and not right_ok[i]):
                break
            start = i
    return Profile(max_gap, connected, cheesy, blocks, completable)


# -- public predicates on cell sets ------------------------------------------


def is_polyomino(s: Iterable[Cell]) -> bool:
    s = list(s)
    return bool(s) and connected_cols(columns(s))


def is_column_convex(s: Iterable[Cell]) -> bool:
    s = list(s)
    if not s:
        return False
    cols = columns(s)
    return columns_ok(cols, 0) and connected_cols(cols)


def is_rightward_semidirected(s: Iterable[Cell]) -> bool:
    cols = columns(s)
    return connected_cols(cols) and rightward_cols(cols)


def is_leftward_semidirected(s: Iterable[Cell]) -> bool:
    cols = columns(s)
    return connected_cols(cols) and leftward_cols(cols)


def is_cheesy(s: Iterable[Cell], m: int) -> bool:
    return cheesy_cols(columns(s), m)


def is_bird(s: Iterable[Cell], m: int) -> bool:
    cols = columns(s)
    return columns_ok(cols, m) and connected_cols(cols) and bird_cols(cols)


def is_cheesy_blocks(s: Iterable[Cell], m: int) -> bool:
    return cheesy_blocks_cols(columns(s), m)


def bird_partition(s: Iterable[Cell], m: int) -> list[list[int]] | None:
    """Column x-coordinates of each bird in one decomposition, or ``None``."""
    cols = columns(s)
    if not (columns_ok(cols, m) and connected_cols(cols)):
        return None
    blocks = bird_partition_cols(cols)
    if blocks is None:
        return None
    return [[cols[i][0] for i in range(a, b + 1)] for a, b in blocks]


def is_incomplete_cheesy_blocks(s: Iterable[Cell], m: int) -> bool:
    s = list(s)
    return bool(s) and incomplete_cheesy_blocks_cols(columns(s), m)


def member_cols(cid: ClassId, cols: Columns) -> bool:
    kind, m = cid.kind, cid.m
    if kind is Kind.POLYOMINO:
        return connected_cols(cols)
    if kind is Kind.COLUMN_CONVEX:
        return columns_ok(cols, 0) and connected_cols(cols)
    if kind is Kind.RIGHTWARD_SEMIDIRECTED:
        return connected_cols(cols) and rightward_cols(cols)
    if kind is Kind.LEFTWARD_SEMIDIRECTED:
        return connected_cols(cols) and leftward_cols(cols)
    if kind is Kind.CHEESY:
        return cheesy_cols(cols, m)
    if kind is Kind.BIRD:
        return columns_ok(cols, m) and connected_cols(cols) and bird_cols(cols)
    if kind is Kind.CHEESY_BLOCKS:
        return cheesy_blocks_cols(cols, m)
    if kind is Kind.INCOMPLETE_CHEESY_BLOCKS:
        return incomplete_cheesy_blocks_cols(cols, m)
    raise ValueError(f"unknown class {cid}")


def member(cid: ClassId, s: Iterable[Cell]) -> bool:
    s = list(s)
    return bool(s) and member_cols(cid, columns(s))

import pytest

from cheesyhex.classify import (
    ClassId,
    Kind,
    bird_partition,
    completing_column,
    is_bird,
    is_cheesy,
    is_cheesy_blocks,
    is_column_convex,
    is_incomplete_cheesy_blocks,
    is_leftward_semidirected,
    is_polyomino,
    is_rightward_semidirected,
    member,
    member_cols,
)
from cheesyhex.enumeration import generate, members
from cheesyhex.hexgrid import cells_of, columns

HOLED = {(0, 0), (0, 2)}  # one column, gap 1
# holed column closed on the right by a three-cell column
CORKED = {(0, 0), (0, 2), (1, -1), (1, 0), (1, 1)}
# gap-free column, then a holed one whose upper run floats
FLOATING = {(0, 0), (1, 0), (1, 2)}


def test_class_id():
    assert ClassId(Kind.CHEESY, 2).max_gap == 2
    assert ClassId(Kind.COLUMN_CONVEX).max_gap == 0
    with pytest.raises(ValueError):
        ClassId(Kind.CHEESY, -1)
    with pytest.raises(ValueError):
        ClassId(Kind.POLYOMINO, 1)


def test_small_examples():
    assert not is_polyomino(HOLED)
    assert is_incomplete_cheesy_blocks(HOLED, 1)
    assert not is_incomplete_cheesy_blocks(HOLED, 0)
    assert is_cheesy_blocks(CORKED, 1)
    assert not is_cheesy(CORKED, 1)  # first column has a gap
    assert is_bird(CORKED, 1)
    assert bird_partition(CORKED, 1) == [[0, 1]]
    assert is_incomplete_cheesy_blocks(FLOATING, 1)
    assert not is_cheesy_blocks(FLOATING, 1)


def test_semidirected():
    fork = {(0, 0), (0, 1), (0, 2), (1, -1), (1, 2)}  # both right runs touch the left column
    assert is_polyomino(fork)
    assert is_rightward_semidirected(fork)
    assert not is_leftward_semidirected(fork)
    assert is_cheesy(fork, 2) and not is_cheesy(fork, 1)
    assert not is_column_convex(fork)
    col = {(0, 0), (0, 1), (0, 2)}
    assert is_rightward_semidirected(col) and is_leftward_semidirected(col)
    assert is_column_convex(col)


def test_completing_column_spans_last_column():
    x, runs = completing_column(columns(HOLED))
    assert x == 1 and runs == ((-1, 4),)


@pytest.mark.parametrize("n", range(1, 7))
def test_inclusions(n):
    for cols in generate(n, 2):
        cells = cells_of(cols)
        blocks1 = member(ClassId(Kind.CHEESY_BLOCKS, 1), cells)
        if member(ClassId(Kind.CHEESY, 1), cells):
            assert blocks1
        if blocks1:
            assert member(ClassId(Kind.CHEESY_BLOCKS, 2), cells)
            assert not member(ClassId(Kind.INCOMPLETE_CHEESY_BLOCKS, 1), cells)
        if member(ClassId(Kind.BIRD, 1), cells):
            assert blocks1
        assert member(ClassId(Kind.CHEESY_BLOCKS, 0), cells) == member(ClassId(Kind.COLUMN_CONVEX), cells)


@pytest.mark.parametrize("kind", [Kind.CHEESY, Kind.BIRD, Kind.CHEESY_BLOCKS, Kind.INCOMPLETE_CHEESY_BLOCKS])
def test_fast_profile_agrees_with_predicates(kind):
    # members() filters with the one-pass profile; member_cols uses the definitions
    cid = ClassId(kind, 2)
    for n in range(1, 7):
        fast = set(members(cid, n))
        slow = {c for c in generate(n, 2) if member_cols(cid, c)}
        assert fast == slow


def test_incomplete_may_be_disconnected():
    assert not is_polyomino(FLOATING)
    assert member(ClassId(Kind.INCOMPLETE_CHEESY_BLOCKS, 1), FLOATING)

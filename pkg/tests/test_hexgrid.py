from hypothesis import given, strategies as st

from cheesyhex.hexgrid import (
    ColumnShape,
    columns,
    format_figure,
    is_connected,
    neighbors,
    normalize,
    parse_figure,
    reflect,
    runs_touch,
    shared_edges,
)

cells = st.frozensets(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=25)


def test_right_neighbours():
    assert {(1, 0), (1, -1)} <= neighbors((0, 0))


def test_adjacency_regular_and_symmetric():
    for x in range(-50, 50, 7):
        for y in range(-50, 50, 3):
            nb = neighbors((x, y))
            assert len(nb) == 6
            assert all((x, y) in neighbors(c) for c in nb)


def test_two_cell_figures():
    shapes = {normalize({(0, 0), c}) for c in neighbors((0, 0))}
    assert len(shapes) == 3


def test_columns_examples():
    assert columns({(0, 0)}) == ((0, ((0, 1),)),)
    assert columns({(0, 0), (0, 2)}) == ((0, ((0, 1), (2, 1))),)
    assert columns({(0, 0), (1, 0), (1, 1)}) == ((0, ((0, 1),)), (1, ((0, 2),)))


def test_is_connected_examples():
    assert is_connected({(0, 0), (1, 0)})
    assert not is_connected({(0, 0), (0, 2)})
    assert is_connected({(0, 0), (1, -1)})
    assert is_connected(set())


def test_offset_law():
    # contiguous runs of heights k and h touch at exactly k + h offsets
    for k in range(1, 13):
        for h in range(1, 13):
            hits = [b for b in range(-30, 30) if shared_edges((0, k), (b, h)) > 0]
            assert len(hits) == k + h
            assert all(runs_touch((0, k), (b, h)) for b in hits)


def test_shared_edges_far_apart():
    assert shared_edges((0, 2), (10, 3)) == 0


def test_column_shape():
    s = ColumnShape(2, 1, 3)
    assert (s.height, s.cells, s.has_gap) == (6, 5, True)
    assert s.runs(4) == ((4, 2), (7, 3))
    assert ColumnShape.from_runs(s.runs(4)) == s
    assert ColumnShape(3).runs() == ((0, 3),)


def test_column_shape_validation():
    for bad in ((0, 0, 0), (1, 1, 0), (1, 0, 2), (2, -1, 1)):
        try:
            ColumnShape(*bad).validate()
        except ValueError:
            continue
        raise AssertionError(bad)


def test_single_cell_reflection():
    assert reflect({(3, 5)}) == frozenset({(0, 0)})


@given(cells)
def test_normalize_idempotent(s):
    n = normalize(s)
    assert normalize(n) == n
    assert min(x for x, _ in n) == 0
    assert min(y for x, y in n if x == 0) == 0


@given(cells, st.integers(-9, 9), st.integers(-9, 9))
def test_normalize_translation_invariant(s, dx, dy):
    assert normalize(s) == normalize({(x + dx, y + dy) for x, y in s})


@given(cells)
def test_reflect_involution(s):
    assert reflect(reflect(s)) == normalize(s)


@given(cells)
def test_reflect_preserves_structure(s):
    r = reflect(s)
    assert len(r) == len(s)
    assert is_connected(r) == is_connected(s)
    lengths = [tuple(k for _, k in runs) for _, runs in columns(s)]
    assert [tuple(k for _, k in runs) for _, runs in columns(r)] == lengths[::-1]


@given(cells)
def test_figure_text_roundtrip(s):
    assert parse_figure(format_figure(s)) == s

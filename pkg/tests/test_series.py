from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cheesyhex.series import (
    LEVEL1_UNKNOWNS,
    IntPolynomial,
    NotDivisible,
    RatFuncMatrix,
    RationalFunction,
    SingularSystem,
    build_level1_system,
    guess_rational,
    paper_gf,
    parse_polynomial,
    poly_gcd,
    series_expand,
    solve_level1,
    solve_linear_system,
    squarefree_decomposition,
)

polys = st.lists(st.integers(-20, 20), min_size=1, max_size=7).map(IntPolynomial)
nonzero = polys.filter(lambda p: not p.is_zero())
Q = IntPolynomial([0, 1])


def test_basic_arithmetic():
    a = IntPolynomial([1, -1])
    assert a * a == IntPolynomial([1, -2, 1])
    assert a**3 == IntPolynomial([1, -3, 3, -1])
    assert (a * a).exact_divide(a) == a
    assert IntPolynomial([4, 6]).content() == 2
    assert a(3) == -2
    assert IntPolynomial([1, 2, 3]).derivative() == IntPolynomial([2, 6])
    with pytest.raises(NotDivisible):
        IntPolynomial([1, 0, 1]).exact_divide(a)


def test_parse_polynomial():
    assert parse_polynomial("1-9q+27q^2-q^6") == IntPolynomial([1, -9, 27, 0, 0, 0, -1])
    assert parse_polynomial("q") == Q


@given(nonzero, nonzero)
def test_exact_divide_inverts_multiply(a, b):
    assert (a * b).exact_divide(b) == a


@given(nonzero, nonzero, nonzero)
def test_gcd_contains_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    # exact_divide raises unless each division is exact
    g.exact_divide(c.primitive())
    (a * c).exact_divide(g)
    (b * c).exact_divide(g)


def test_squarefree():
    p = IntPolynomial([1, -1]) ** 2 * IntPolynomial([1, 2])
    parts = dict((m, f) for f, m in squarefree_decomposition(p))
    assert parts[2].degree == 1 and parts[1].degree == 1


def test_rational_function_reduces():
    f = RationalFunction(IntPolynomial([1, -1]) * IntPolynomial([2, 1]), IntPolynomial([1, -1]) * IntPolynomial([3]))
    assert f == RationalFunction(IntPolynomial([2, 1]), IntPolynomial([3]))
    assert f.den[0] > 0


def test_series_expand():
    assert series_expand(RationalFunction(Q, IntPolynomial([1, -1]) ** 2), 5) == [0, 1, 2, 3, 4, 5]
    # non-monic constant term
    assert series_expand(RationalFunction(IntPolynomial([2]), IntPolynomial([2, -1])), 3) == [
        1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]


def test_guess_rational():
    fib = [1, 1]
    for _ in range(20):
        fib.append(fib[-1] + fib[-2])
    f = guess_rational(fib)
    assert f == RationalFunction(IntPolynomial([1]), IntPolynomial([1, -1, -1]))
    assert guess_rational([1, 2, 3]) is None


def test_solve_small_system():
    one = RationalFunction(1)
    m = RatFuncMatrix([[one, one], [one, -one]], [RationalFunction(Q), RationalFunction(0)], ["x", "y"])
    x, y = solve_linear_system(m)
    half_q = RationalFunction(Q, IntPolynomial([2]))
    assert x == half_q and y == half_q


def test_singular_system():
    one = RationalFunction(1)
    m = RatFuncMatrix([[one, one], [one, one]], [one, one], ["x", "y"])
    with pytest.raises(SingularSystem):
        solve_linear_system(m)


def test_level1_system_solution():
    system = build_level1_system()
    assert tuple(system.unknowns) == LEVEL1_UNKNOWNS
    sol = solve_level1()
    assert sol["E1"] == paper_gf(1)
    assert system.apply([sol[u] for u in LEVEL1_UNKNOWNS]) == system.rhs
    assert series_expand(sol["G"], 6) == [0, 0, 1, 6, 27, 114, 475]


def test_paper_gf():
    assert paper_gf(1).num == IntPolynomial([0, 1, -6, 11, -6, 2])
    assert series_expand(paper_gf(2), 12)[12] == 6360809
    assert paper_gf(3).den.degree == 56
    with pytest.raises(ValueError):
        paper_gf(4)

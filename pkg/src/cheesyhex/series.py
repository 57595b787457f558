"""Exact polynomials in ``q``, rational functions, and power series.

Everything here is integer or :class:`fractions.Fraction` arithmetic; no
floating point.  Polynomials are immutable and keep their coefficients
lowest degree first.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence


class NotDivisible(ArithmeticError):
    pass


class SingularSystem(ArithmeticError):
    pass


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplying ``q**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _strip(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients only, got {c!r}")
        self.coeffs = coeffs

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def one_minus_q(cls, power: int = 1) -> "IntPolynomial":
        return cls([1, -1]) ** power

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body += "*"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body + mono))
        text = "".join(f"{s}{b}" for s, b in parts)
        return text[1:] if text.startswith("+") else text

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        """Gcd of the coefficients, signed like the leading coefficient."""
        if not self.coeffs:
            return 0
        g = reduce(math.gcd, self.coeffs)
        return -g if self.coeffs[-1] < 0 else g

    def primitive(self) -> "IntPolynomial":
        c = self.content()
        return self if c in (0, 1) else IntPolynomial(x // c for x in self.coeffs)

    def divmod_rational(self, other: "IntPolynomial"):
        """Quotient and remainder over the rationals (Fraction coefficients)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.coeffs[-1])
        quot = [Fraction(0)] * max(len(rem) - len(other) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            f = rem[k + other.degree] / lead
            quot[k] = f
            if f:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= f * c
        while rem and rem[-1] == 0:
            rem.pop()
        return quot, rem

    def exact_divide(self, other: "IntPolynomial") -> "IntPolynomial":
        quot, rem = self.divmod_rational(other)
        if rem or any(f.denominator != 1 for f in quot):
            raise NotDivisible(f"{other} does not divide {self} over the integers")
        return IntPolynomial(int(f) for f in quot)

    def pseudo_remainder(self, other: "IntPolynomial") -> "IntPolynomial":
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and rem:
            shift = len(rem) - 1 - d
            top = rem[-1]
            rem = [lead * c for c in rem]
            for j, c in enumerate(other.coeffs):
                rem[shift + j] -= top * c
            rem = list(_strip(rem))
        return IntPolynomial(rem)


def _poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (primitive remainder sequence)."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, a.pseudo_remainder(b).primitive()
    if a.is_zero():
        return a
    a = a.primitive()
    return -a if a.coeffs[-1] < 0 else a


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Factors ``f_k`` with ``p = c * prod f_k**k``, each squarefree and primitive.

    Musser's gcd scheme; every intermediate is only needed up to a scalar.
    """
    if p.degree < 1:
        return []
    out = []
    c = poly_gcd(p, p.derivative())
    w = _exact_primitive_div(p, c)
    k = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        factor = _exact_primitive_div(w, y)
        if factor.degree > 0:
            out.append((factor, k))
        w = y
        c = _exact_primitive_div(c, y)
        k += 1
    return out


def _exact_primitive_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``a / b`` up to a rational scalar, returned primitive."""
    quot, rem = a.divmod_rational(b)
    if rem:
        raise NotDivisible(f"{b} does not divide {a}")
    lcm = reduce(lambda x, y: x * y // math.gcd(x, y), (f.denominator for f in quot), 1)
    return IntPolynomial(int(f * lcm) for f in quot).primitive()


class RationalFunction:
    """Reduced quotient of integer polynomials.

    Invariants: the denominator is nonzero, numerator and denominator have
    no common factor of positive degree, the pair has no common integer
    factor, and the lowest nonzero coefficient of the denominator is
    positive.  A denominator with constant term 1 stays that way.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, reduce_=True):
        num, den = _poly(num), _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce_:
            num, den = _reduce(num, den)
        self.num, self.den = num, den

    def __repr__(self):
        return f"RationalFunction({list(self.num)}, {list(self.den)})"

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __eq__(self, other):
        other = _rf(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = _rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce_=False)

    def __sub__(self, other):
        return self + (-_rf(other))

    def __rsub__(self, other):
        return _rf(other) - self

    def __mul__(self, other):
        other = _rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _rf(other) / self

    def expand(self, n: int) -> list:
        """Coefficients of ``q**0 .. q**n`` of the Taylor series at 0."""
        return series_expand(self, n)


def _rf(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(x)


def _reduce(num: IntPolynomial, den: IntPolynomial):
    if num.is_zero():
        return IntPolynomial(), IntPolynomial([1])
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = _exact_primitive_div_scaled(num, g)
        den = _exact_primitive_div_scaled(den, g)
    c = math.gcd(num.content(), den.content())
    if c > 1:
        num = IntPolynomial(x // c for x in num)
        den = IntPolynomial(x // c for x in den)
    low = next(x for x in den.coeffs if x)
    if low < 0:
        num, den = -num, -den
    return num, den


def _exact_primitive_div_scaled(a: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    # g is primitive, so by Gauss's lemma a / g has integer coefficients
    return a.exact_divide(g)


def q_power_over(k: int, power: int, scale: int = 1) -> RationalFunction:
    """``scale * q**k / (1 - q)**power``."""
    return RationalFunction(IntPolynomial.monomial(k, scale), IntPolynomial.one_minus_q(power))


# -- power series ------------------------------------------------------------


def series_expand(f: RationalFunction, n: int) -> list:
    """Exact Taylor coefficients ``a_0..a_n`` from ``den * A = num``."""
    den0 = f.den[0]
    if den0 == 0:
        raise ValueError("denominator vanishes at q = 0; no Taylor series")
    out = []
    for k in range(n + 1):
        acc = f.num[k]
        for j in range(1, min(k, f.den.degree) + 1):
            acc -= f.den[j] * out[k - j]
        if den0 == 1:
            out.append(acc)
        else:
            v = Fraction(acc, den0)
            out.append(int(v) if v.denominator == 1 else v)
    return out


def series_mul(a: Sequence, b: Sequence, n: int) -> list:
    """Product of two truncated series, coefficients through ``q**n``."""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def guess_rational(seq: Sequence[int], check: int = 4) -> RationalFunction | None:
    """Smallest rational function whose expansion starts with ``seq``.

    Berlekamp-Massey over the rationals finds the shortest linear recurrence;
    the guess is accepted only if the recurrence was already stable for the
    last ``check`` terms (otherwise ``None``).
    """
    s = [Fraction(x) for x in seq]
    C, B = [Fraction(1)], [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    last_change = 0
    for i, si in enumerate(s):
        d = si + sum(C[j] * s[i - j] for j in range(1, L + 1))
        if d == 0:
            m += 1
            continue
        T = list(C)
        coef = d / b
        C = C + [Fraction(0)] * max(0, len(B) + m - len(C))
        for j, bj in enumerate(B):
            C[j + m] -= coef * bj
        if 2 * L <= i:
            L, B, b, m = i + 1 - L, T, d, 1
        else:
            m += 1
        last_change = i
    if len(s) - 1 - last_change < check or 2 * L + check > len(s):
        return None
    C = C[: L + 1] + [Fraction(0)] * max(0, L + 1 - len(C))
    num = series_mul(C, s, len(s) - 1)[: L + 1]
    lcm = reduce(lambda x, y: x * y // math.gcd(x, y), (f.denominator for f in C + num), 1)
    return RationalFunction(
        IntPolynomial(int(f * lcm) for f in num), IntPolynomial(int(f * lcm) for f in C)
    )


# -- linear systems over Q(q) -------------------------------------------------


@dataclass
class RatFuncMatrix:
    rows: list[list[RationalFunction]]
    rhs: list[RationalFunction]
    unknowns: tuple[str, ...] = ()

    def __post_init__(self):
        self.rows = [[_rf(x) for x in row] for row in self.rows]
        self.rhs = [_rf(x) for x in self.rhs]
        n = len(self.rows)
        if any(len(r) != n for r in self.rows) or len(self.rhs) != n:
            raise ValueError("system must be square with a matching right-hand side")

    def apply(self, x: Sequence[RationalFunction]) -> list[RationalFunction]:
        return [sum((a * b for a, b in zip(row, x)), RationalFunction(0)) for row in self.rows]


def _lcm_poly(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    g = poly_gcd(a, b)
    return (a * b).exact_divide(g) if g.degree > 0 else (a * b).primitive()


def solve_linear_system(system: RatFuncMatrix) -> list[RationalFunction]:
    """Fraction-free (Bareiss) elimination, then back substitution.

    Each row is first scaled by the lcm of its denominators, so elimination
    runs over integer polynomials with exact divisions; only the final
    back substitution forms quotients.
    """
    n = len(system.rows)
    aug = []
    for row, r in zip(system.rows, system.rhs):
        entries = row + [r]
        scale = reduce(_lcm_poly, (e.den for e in entries), IntPolynomial([1]))
        aug.append([(e.num * scale).exact_divide(e.den) for e in entries])
    prev = IntPolynomial([1])
    for k in range(n):
        pivot = next((i for i in range(k, n) if not aug[i][k].is_zero()), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {k}")
        aug[k], aug[pivot] = aug[pivot], aug[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                aug[i][j] = (aug[k][k] * aug[i][j] - aug[i][k] * aug[k][j]).exact_divide(prev)
            aug[i][k] = IntPolynomial()
        prev = aug[k][k]
    x: list[RationalFunction] = [RationalFunction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = RationalFunction(aug[i][n])
        for j in range(i + 1, n):
            acc = acc - RationalFunction(aug[i][j]) * x[j]
        x[i] = acc / RationalFunction(aug[i][i])
    return x


# -- functional equations as data ---------------------------------------------


@dataclass(frozen=True)
class Equation:
    """``lhs = constant + sum(coeff * combination)`` in unknown series.

    A combination maps unknown names to integer multipliers, so
    ``{"F1": 1, "E1": -1}`` stands for ``F1 - E1``.
    """

    name: str
    lhs: str
    constant: RationalFunction
    terms: tuple[tuple[RationalFunction, Mapping[str, int]], ...]

    def unknowns(self) -> set[str]:
        out = {self.lhs}
        for _, comb in self.terms:
            out.update(comb)
        return out

    def residual(self, values: Mapping[str, Sequence[int]], n: int) -> list:
        """Coefficients of ``lhs - rhs`` through ``q**n`` for given series."""
        res = [0] * (n + 1)
        for i, c in enumerate(series_expand(self.constant, n)):
            res[i] -= c
        lhs = values[self.lhs]
        for i in range(n + 1):
            res[i] += lhs[i] if i < len(lhs) else 0
        for coeff, comb in self.terms:
            mix = [0] * (n + 1)
            for name, k in comb.items():
                vals = values[name]
                for i in range(min(n + 1, len(vals))):
                    mix[i] += k * vals[i]
            for i, c in enumerate(series_mul(series_expand(coeff, n), mix, n)):
                res[i] -= c
        return res


def system_from_equations(equations: Sequence[Equation], unknowns: Sequence[str]) -> RatFuncMatrix:
    index = {u: i for i, u in enumerate(unknowns)}
    rows, rhs = [], []
    for eq in equations:
        row = [RationalFunction(0)] * len(unknowns)
        row[index[eq.lhs]] = row[index[eq.lhs]] + 1
        for coeff, comb in eq.terms:
            for name, k in comb.items():
                row[index[name]] = row[index[name]] - coeff * k
        rows.append(row)
        rhs.append(eq.constant)
    return RatFuncMatrix(rows, rhs, tuple(unknowns))


def _eq(name, lhs, constant, *terms):
    const = sum(constant, RationalFunction(0))
    return Equation(name, lhs, const, tuple(terms))


_Q = q_power_over
E1, F1, G = {"E1": 1}, {"F1": 1}, {"G": 1}
F1_MINUS_E1 = {"F1": 1, "E1": -1}

# level one: counts E1, height-weighted counts F1, incomplete figures G
LEVEL1_EQUATIONS = (
    _eq(
        "E1 at t=1", "E1",
        [_Q(1, 1)],
        (_Q(1, 2), E1),
        (_Q(1, 1), F1),
        (_Q(2, 2), F1_MINUS_E1),
        (_Q(2, 2), G),
    ),
    _eq(
        "dE/dt at t=1", "F1",
        [_Q(1, 1), _Q(2, 2)],
        (_Q(1, 2), E1),
        (_Q(2, 3, 2), E1),
        (_Q(1, 1), F1),
        (_Q(2, 2), F1),
        (_Q(2, 2, 3), F1_MINUS_E1),
        (_Q(3, 3, 2), F1_MINUS_E1),
        (_Q(2, 2, 2), G),
        (_Q(3, 3, 2), G),
    ),
    _eq(
        "G", "G",
        [_Q(2, 2)],
        (_Q(2, 2, 2), E1),
        (_Q(2, 3, 2), E1),
        (_Q(2, 2, 2), G),
        (_Q(3, 3, 2), G),
    ),
)
LEVEL1_UNKNOWNS = ("E1", "F1", "G")

# level two, the four printed equations for last columns with a 2-cell hole
_BODY = {"B1": 1, "A1": -2, "B0": 1, "D1": 1, "C1": -2}
_DANGER = {"C1": 2, "E0": -1, "F0": -1}
LEVEL2_EQUATIONS = (
    _eq(
        "C1", "C1", [],
        (_Q(2, 2), _BODY),
        (_Q(2, 1, -1), _DANGER),
    ),
    _eq(
        "D1", "D1", [],
        (_Q(2, 2, 4) + _Q(3, 3, 2), _BODY),
        (-(_Q(2, 1, 4) + _Q(3, 2)), _DANGER),
    ),
    _eq(
        "E0", "E0", [],
        (_Q(2, 1), {"B1": 1, "A1": -2, "B0": 1, "D1": 1, "C1": -3, "F0": 1}),
        (_Q(2, 0, -1), {"C1": 1, "E0": -1}),
    ),
    _eq(
        "F0", "F0", [],
        (_Q(2, 1), {"B1": 1, "A1": -2, "B0": 1, "D1": 1, "C1": -3, "E0": 1}),
        (_Q(2, 0, -1), {"C1": 1, "F0": -1}),
    ),
)
LEVEL2_UNKNOWNS = ("A1", "B0", "B1", "C1", "D1", "E0", "F0", "G1", "H0", "I0", "J1", "K0", "L0")


def build_level1_system() -> RatFuncMatrix:
    return system_from_equations(LEVEL1_EQUATIONS, LEVEL1_UNKNOWNS)


def solve_level1() -> dict[str, RationalFunction]:
    system = build_level1_system()
    return dict(zip(system.unknowns, solve_linear_system(system)))


# -- closed forms -------------------------------------------------------------


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse ``1-9q+27q^2`` style text (LaTeX braces and spaces allowed)."""
    import re

    text = text.replace(" ", "").replace("{", "").replace("}", "").replace("\\", "")
    if not text:
        raise ValueError("empty polynomial text")
    if text[0] not in "+-":
        text = "+" + text
    coeffs: dict[int, int] = {}
    pos = 0
    term = re.compile(r"([+-])(\d*)(q(?:\^(\d+))?)?")
    while pos < len(text):
        m = term.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign, digits, qpart, exp = m.groups()
        if not digits and not qpart:
            raise ValueError(f"dangling sign in {text!r}")
        c = int(digits) if digits else 1
        k = 0 if not qpart else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + (-c if sign == "-" else c)
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial(coeffs.get(i, 0) for i in range(top + 1))


def paper_gf(level: int) -> RationalFunction:
    """Closed-form area generating function of level 1, 2 or 3."""
    from . import _gf_data

    try:
        num_text, den_text = _gf_data.CLOSED_FORMS[level]
    except KeyError:
        raise ValueError(f"no closed form for level {level}; expected 1, 2 or 3") from None
    num = IntPolynomial.monomial(1) * parse_polynomial(num_text)
    return RationalFunction(num, parse_polynomial(den_text))


def to_json(coeffs: Sequence[int]) -> str:
    """JSON array of exact decimal strings."""
    return json.dumps([str(c) for c in coeffs])

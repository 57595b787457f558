"""Singularity analysis of rational generating functions.

Roots are seeded from numpy's companion-matrix eigenvalues and polished by
Newton iteration in mpmath at the requested working precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import mpmath
import numpy as np

from .series import IntPolynomial, RationalFunction, squarefree_decomposition


class RootError(ArithmeticError):
    """Root finding did not reach the requested residual."""


class NoDominantSingularity(ArithmeticError):
    pass


@dataclass(frozen=True)
class RootSet:
    roots: tuple  # mpmath mpc values, sorted by (modulus, argument)
    multiplicities: tuple[int, ...]
    precision: int

    def __len__(self):
        return len(self.roots)

    def as_complex(self) -> list[complex]:
        return [complex(r) for r in self.roots]


def _residual_bound(coeffs, r, prec: int):
    scale = sum(abs(c) * max(1, abs(r)) ** i for i, c in enumerate(coeffs))
    return scale * mpmath.mpf(10) ** (-(prec - 2))


def _polish(coeffs, seed, prec: int):
    """Newton from ``seed`` on a squarefree polynomial, low-order-first coeffs."""
    hi_first = list(reversed(coeffs))
    d_hi = [c * (len(coeffs) - 1 - i) for i, c in enumerate(hi_first[:-1])]
    z = mpmath.mpc(seed)
    for _ in range(200):
        f = mpmath.polyval(hi_first, z)
        df = mpmath.polyval(d_hi, z)
        if df == 0:
            break
        step = f / df
        z -= step
        if abs(step) <= abs(z) * mpmath.mpf(10) ** (-(prec + 3)):
            break
    return z


def _squarefree_roots(p: IntPolynomial, prec: int) -> list:
    coeffs = list(p.coeffs)
    deg = len(coeffs) - 1
    if deg < 1:
        return []
    seeds = np.roots([float(c) for c in reversed(coeffs)])
    mp_coeffs = [mpmath.mpf(c) for c in coeffs]
    roots = [_polish(mp_coeffs, s, prec) for s in seeds]
    ok = all(
        abs(mpmath.polyval(mp_coeffs[::-1], r)) <= _residual_bound(mp_coeffs, r, prec)
        for r in roots
    )
    distinct = all(
        abs(a - b) > mpmath.mpf(10) ** (-(prec // 2))
        for i, a in enumerate(roots) for b in roots[i + 1:]
    )
    if not (ok and distinct):
        try:
            roots = list(mpmath.polyroots(mp_coeffs[::-1], maxsteps=400, extraprec=4 * prec))
        except mpmath.libmp.NoConvergence as exc:
            raise RootError(f"no convergence for degree {deg}") from exc
        for r in roots:
            if abs(mpmath.polyval(mp_coeffs[::-1], r)) > _residual_bound(mp_coeffs, r, prec):
                raise RootError(f"root {r} misses the residual bound")
    return roots


def find_roots(p: IntPolynomial | list[int], precision: int = 30) -> RootSet:
    """All complex roots of an integer polynomial with multiplicities.

    The residual ``|p(r)|`` of each root is at most
    ``sum |c_i| max(1, |r|)^i * 10^-(precision-2)``.
    """
    if not isinstance(p, IntPolynomial):
        p = IntPolynomial(p)
    if p.degree < 1:
        return RootSet((), (), precision)
    with mpmath.workdps(precision + 10):
        found = []
        for factor, mult in squarefree_decomposition(p):
            for r in _squarefree_roots(factor, precision + 10):
                found.append((r, mult))
        found.sort(key=lambda rm: (float(abs(rm[0])), float(mpmath.arg(rm[0]))))
        return RootSet(tuple(r for r, _ in found), tuple(m for _, m in found), precision)


def dominant_singularity(f: RationalFunction, precision: int = 30, margin: float = 1e-12):
    """Smallest-modulus pole of ``f``; it must be real, positive and unique."""
    rs = find_roots(f.den, precision)
    if not rs.roots:
        raise NoDominantSingularity("polynomial has no singularities")
    with mpmath.workdps(precision + 10):
        r0 = rs.roots[0]
        m0 = rs.multiplicities[0]
        if abs(mpmath.im(r0)) > margin or mpmath.re(r0) <= 0:
            raise NoDominantSingularity(f"smallest root {r0} is not a positive real")
        for r in rs.roots[1:]:
            if abs(r) - abs(r0) <= margin * abs(r0):
                raise NoDominantSingularity("several roots share the minimal modulus")
        return mpmath.re(r0), m0


@dataclass(frozen=True)
class AsymptoticForm:
    """``a_n ~ amplitude * growth**n`` from a simple dominant pole ``rho``."""

    rho: object
    growth: object
    amplitude: object
    precision: int

    def estimate(self, n: int):
        with mpmath.workdps(self.precision + 10):
            return self.amplitude * self.growth**n

    def to_dict(self, digits: int = 6) -> dict:
        return {
            "rho": mpmath.nstr(self.rho, self.precision),
            "growth": f"{float(self.growth):.{digits}f}",
            "amplitude": f"{float(self.amplitude):.{digits}f}",
            "growth_full": mpmath.nstr(self.growth, self.precision),
            "amplitude_full": mpmath.nstr(self.amplitude, self.precision),
        }


def _mp_eval(p: IntPolynomial, z):
    return mpmath.polyval([mpmath.mpf(c) for c in reversed(p.coeffs)], z)


def asymptotic_form(f: RationalFunction, precision: int = 30) -> AsymptoticForm:
    """Growth constant ``1/rho`` and amplitude ``-N(rho)/(rho D'(rho))``."""
    rho, mult = dominant_singularity(f, precision)
    if mult != 1:
        raise NoDominantSingularity(f"dominant pole has multiplicity {mult}")
    with mpmath.workdps(precision + 10):
        amp = -_mp_eval(f.num, rho) / (rho * _mp_eval(f.den.derivative(), rho))
        return AsymptoticForm(rho, 1 / rho, amp, precision)


def asymptotic_check(form: AsymptoticForm, n: int, exact: int) -> float:
    """Relative error ``|exact / estimate - 1|``."""
    with mpmath.workdps(form.precision + 10):
        return float(abs(mpmath.mpf(exact) / form.estimate(n) - 1))


def extrapolate_growth(values, decimals: int = 3, ratio: str = "nearest-tenth") -> float:
    """Limit of an increasing sequence of four constants with geometric steps.

    The values are rounded to ``decimals`` places and differenced.  The step
    ratio is estimated from the last three differences: ``"nearest-tenth"``
    averages ``d2/d1`` and ``d3/d2`` and rounds to one decimal,
    ``"measured"`` uses ``d3/d2`` as is.  The remaining geometric tail is
    added to the third value, which is the last level whose step is known.
    """
    vals = [round(float(v), decimals) for v in values]
    if len(vals) != 4:
        raise ValueError("need exactly four values")
    d = [b - a for a, b in zip(vals, vals[1:])]
    if all(abs(x) < 10.0**-decimals / 2 for x in d):
        return vals[-1]
    if any(x <= 0 for x in d) or not (d[0] > d[1] > d[2]):
        raise ValueError("values must increase with shrinking steps")
    if ratio == "nearest-tenth":
        c = round((d[1] / d[0] + d[2] / d[1]) / 2, 1)
    elif ratio == "measured":
        c = d[2] / d[1]
    else:
        raise ValueError(f"unknown ratio rule {ratio!r}")
    if not 0 < c < 1:
        raise ValueError(f"step ratio {c} does not give a convergent tail")
    return vals[2] + d[2] / (1 - c)


def roots_to_json(rs: RootSet, digits: int = 15) -> str:
    return json.dumps(
        [
            {"re": mpmath.nstr(mpmath.re(r), digits), "im": mpmath.nstr(mpmath.im(r), digits), "multiplicity": m}
            for r, m in zip(rs.roots, rs.multiplicities)
        ]
    )

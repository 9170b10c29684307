"""Exact evaluation of the edge and spectral-radius bounds for Berge-K_{3,t}-free linear r-graphs.

Rational quantities (f, g1, g2) are kept as :class:`fractions.Fraction`;
floats only appear at the final square root.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import DivisibilityViolated, InvalidParams, NegativeF


def _check(n, r, t, min_r=2):
    if not (n >= r >= min_r) or t < 3:
        raise InvalidParams(f"need n >= r >= {min_r} and t >= 3, got n={n}, r={r}, t={t}")


def f_coefficients(n: int, r: int, t: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(a, b, c)`` with f(n, r, t, x, y) = a x + b y - c."""
    _check(n, r, t)
    q = Fraction(r - 1)
    a = t * q + Fraction((r - 2) * (n - r)) / (2 * q) + Fraction(n - r) / q**2
    b = 1 / q
    c = (
        t + r - 2
        + Fraction((r - 2) * (n - r - 2)) / (2 * q)
        - Fraction((r - 2) * (r - 3) * (n - r)) / (2 * q**2)
    )
    return a, b, c


def eval_f(n: int, r: int, t: int, x, y) -> Fraction:
    a, b, c = f_coefficients(n, r, t)
    return a * Fraction(x) + b * Fraction(y) - c


def g1(n: int, r: int, t: int) -> Fraction:
    _check(n, r, t)
    q = Fraction(r - 1)
    return t * q + Fraction((r - 2) * (n - r)) / (2 * q) + Fraction(n - r) / q**2


def g2(n: int, r: int, t: int) -> Fraction:
    _check(n, r, t)
    q = Fraction(r - 1)
    return (
        Fraction((r - 2) * (r - 3) * (n - r) + 2 * (n - 1)) / (2 * q**2)
        - (t + r - 2)
        - Fraction((r - 2) * (n - r - 2)) / (2 * q)
    )


@dataclass(frozen=True)
class TuranBound:
    d_bound: float
    edge_bound: float
    raw_edge_bound: float
    packing_cap: float
    g1: Fraction
    g2: Fraction
    vacuous: bool


def turan_upper_bound(n: int, r: int, t: int) -> TuranBound:
    """Average-degree root of d^2 - g1 d - g2 <= 0, turned into an edge bound.

    ``edge_bound`` is ``n d / r`` capped by the packing bound n(n-1)/(r(r-1));
    ``raw_edge_bound`` is the uncapped value. When the discriminant is
    negative the quadratic gives nothing and the degree cap (n-1)/(r-1) is used.
    """
    _check(n, r, t, min_r=3)
    a, b = g1(n, r, t), g2(n, r, t)
    disc = a * a + 4 * b
    vacuous = disc < 0
    if vacuous:
        d = (n - 1) / (r - 1)
    else:
        d = (float(a) + math.sqrt(float(disc))) / 2
    raw = n * d / r
    cap = n * (n - 1) / (r * (r - 1))
    return TuranBound(d, min(raw, cap), raw, cap, a, b, vacuous)


def turan_leading_coefficient(r: int) -> Fraction:
    return Fraction(r * (r - 3) + 4, 2 * r * (r - 1) ** 2)


def spectral_upper_bound(n: int, r: int, t: int) -> float:
    """sqrt f(n, r, t, D, D) with D = (n-1)/(r-1); raises ``NegativeF`` if f < 0."""
    _check(n, r, t, min_r=3)
    D = Fraction(n - 1, r - 1)
    val = eval_f(n, r, t, D, D)
    if val < 0:
        raise NegativeF(val)
    return math.sqrt(val)


def spectral_lower_bound(n: int, r: int) -> float:
    """Spectral radius of the two-centre lattice construction, in closed form."""
    if r < 2 or n < r:
        raise InvalidParams(f"need n >= r >= 2, got n={n}, r={r}")
    if (n - r) % (r - 1) ** r:
        raise DivisibilityViolated(f"(r-1)^r = {(r - 1) ** r} does not divide n-r = {n - r}")
    inner = math.sqrt(1 + (n - r) * 2 ** (r + 1) / (r - 1)) + 1
    return 2 ** (-2 / r) * inner ** (2 / r)


def tait_bound(n: int, s: int, t: int) -> float:
    """Largest adjacency eigenvalue bound for K_{s,t}-minor-free graphs (large n)."""
    if not 2 <= s <= t or n < s:
        raise InvalidParams(f"need 2 <= s <= t and n >= s, got n={n}, s={s}, t={t}")
    a = s + t - 3
    return 0.5 * (a + math.sqrt(a * a + 4 * (s - 1) * (n - s + 1) - 4 * (s - 2) * (t - 1)))


@dataclass(frozen=True)
class BoundReport:
    n: int
    r: int
    t: int
    f_value: Fraction
    g1: Fraction | None
    g2: Fraction | None
    turan_edge_bound: float | None
    turan_raw_edge_bound: float | None
    spectral_upper: float | None
    spectral_lower: float | None
    tait_bound: float | None
    applicable: dict

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("f_value", "g1", "g2"):
            if out[key] is not None:
                out[key] = str(out[key])
        return out


def bound_report(n: int, r: int, t: int) -> BoundReport:
    _check(n, r, t)
    D = Fraction(n - 1, r - 1)
    fv = eval_f(n, r, t, D, D)
    applicable = {
        "turan": r >= 3,
        "spectral_upper": r >= 3 and fv >= 0,
        "spectral_lower": t > r and (n - r) % (r - 1) ** r == 0,
        "tait": r == 2 and (n - 2) % t == 0,
    }
    tb = turan_upper_bound(n, r, t) if applicable["turan"] else None
    return BoundReport(
        n, r, t, fv,
        tb.g1 if tb else None,
        tb.g2 if tb else None,
        tb.edge_bound if tb else None,
        tb.raw_edge_bound if tb else None,
        math.sqrt(fv) if applicable["spectral_upper"] else None,
        spectral_lower_bound(n, r) if applicable["spectral_lower"] else None,
        tait_bound(n, 3, t) if n >= 3 else None,
        applicable,
    )

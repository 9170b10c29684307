"""Adjacency-tensor spectral radius of connected linear r-graphs.

The tensor is never materialised: ``(A x^{r-1})_i`` is the sum over edges
``e`` containing ``i`` of the product of ``x_j`` over ``j in e - {i}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DimensionMismatch, DivisibilityViolated, InvalidParams, NoConvergence, NotConnected
from .hypergraph import LinearHypergraph, is_connected


@dataclass
class PerronResult:
    rho: float
    x: np.ndarray
    residual: float
    iterations: int
    converged: bool
    lower: float
    upper: float


def apply_adjacency(H: LinearHypergraph, x) -> np.ndarray:
    """Return A(H) x^{r-1} using per-edge prefix/suffix products (no division)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, expected ({H.n},)")
    out = np.zeros(H.n)
    if not H.m:
        return out
    E = H.edge_array
    X = x[E]
    ones = np.ones((H.m, 1))
    prefix = np.hstack([ones, np.cumprod(X[:, :-1], axis=1)])
    suffix = np.hstack([np.cumprod(X[:, :0:-1], axis=1)[:, ::-1], ones])
    np.add.at(out, E, prefix * suffix)
    return out


def _r_normalize(x, r):
    return x / np.sum(x**r) ** (1.0 / r)


def spectral_radius(
    H: LinearHypergraph, tol: float = 1e-10, max_iter: int = 100_000, shift: float = 1.0
) -> PerronResult:
    """Shifted power iteration with Collatz-Wielandt bounds.

    Iterates ``x <- (A x^{r-1} + shift x^{[r-1]})^{[1/(r-1)]}`` normalised to
    unit r-norm. At each step the ratios ``(A x^{r-1})_i / x_i^{r-1}`` bracket
    rho; iteration stops once the bracket is narrower than ``tol``. The
    returned vector is the one the final bounds were measured at.
    """
    if tol <= 0:
        raise InvalidParams("tol must be positive")
    if not is_connected(H):
        raise NotConnected("spectral radius is only defined here for connected hypergraphs")
    r = H.r
    if H.m == 0:
        x = np.ones(H.n)
        return PerronResult(0.0, x, 0.0, 0, True, 0.0, 0.0)
    x = _r_normalize(np.ones(H.n), r)
    lo = hi = math.nan
    for it in range(1, max_iter + 1):
        xp = x ** (r - 1)
        y = apply_adjacency(H, x) + shift * xp
        ratios = y / xp
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo < tol:
            rho = math.sqrt(lo * hi) - shift
            res = _residual(H, rho, x)
            return PerronResult(rho, x, res, it, True, lo - shift, hi - shift)
        x = _r_normalize(y ** (1.0 / (r - 1)), r)
    rho = math.sqrt(lo * hi) - shift
    best = PerronResult(rho, x, _residual(H, rho, x), max_iter, False, lo - shift, hi - shift)
    raise NoConvergence(best)


def _residual(H, rho, x) -> float:
    return float(np.max(np.abs(apply_adjacency(H, x) - rho * x ** (H.r - 1))))


@dataclass(frozen=True)
class EigenCheck:
    residual: float
    ok: bool


def verify_eigenpair(H: LinearHypergraph, rho: float, x, tol: float = 1e-8) -> EigenCheck:
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, expected ({H.n},)")
    res = _residual(H, rho, x)
    return EigenCheck(res, res <= tol)


def _check_F_params(n, r):
    if r < 2 or n < r:
        raise InvalidParams(f"need n >= r >= 2, got n={n}, r={r}")
    if (n - r) % (r - 1) ** r:
        raise DivisibilityViolated(f"(r-1)^r = {(r - 1) ** r} does not divide n-r = {n - r}")


def closed_form_rho_F(n: int, r: int) -> float:
    _check_F_params(n, r)
    return 2 ** (-2 / r) * (math.sqrt(1 + (n - r) * 2 ** (r + 1) / (r - 1)) + 1) ** (2 / r)


def reduced_system_rho_F(n: int, r: int) -> tuple[float, float, float, float]:
    """Solve the three-class eigen-equations of the two-centre construction.

    With x_u = x_w = x1, x_{v_i} = x2 and every lattice vertex at x3, setting
    x1 = 1 gives x2 = rho^{-1/2}, x3 = 2/rho and a single monotone equation
    for rho, solved by bracketing. The values are then scaled to unit r-norm.
    """
    _check_F_params(n, r)
    c = (n - r) / (r - 1)

    def g(rho):
        return rho - rho ** (-(r - 2) / 2) - c * (2 / rho) ** (r - 1)

    hi = 2.0
    while g(hi) <= 0:
        hi *= 2
    rho = brentq(g, 1.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500) if g(1.0) < 0 else 1.0
    x1, x2, x3 = 1.0, rho**-0.5, 2 / rho
    norm = (2 * x1**r + (r - 2) * x2**r + (n - r) * x3**r) ** (1 / r)
    return rho, x1 / norm, x2 / norm, x3 / norm


def degree_sum_gap(H: LinearHypergraph, result: PerronResult) -> float:
    """(1/(r-1)) sum_{v in N_u} d_v - rho^2 at u = argmax x; nonnegative when the inequality holds."""
    u = int(np.argmax(result.x))
    s = sum(int(H.degrees[v]) for v in H.neighbors(u))
    return s / (H.r - 1) - result.rho**2

"""Maximal real root Y(n, t, beta) of

    (n-1)^{t-1} y^t + (1 - y)^t = (n-1)^{t-1} beta,

which caps the largest outcome probability when the order-t index of
coincidence equals beta.  The default path is Newton's method started at
beta^{1/t} (always above the root, so the convex branch converges from
above), with a bisection guard on the bracket [1/n, beta^{1/t}].  Closed
forms exist for t = 2 and t = 3 (Cardano); one explicit Newton step gives
the analytic upper estimate used by the weaker bounds.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

MAX_ITER = 200


@dataclass(frozen=True)
class UpsilonResult:
    value: float
    method: str
    residual: float   # |y^t/beta + (1-y)^t / ((n-1)^{t-1} beta) - 1|
    iterations: int


def admissible_range(n: int, t: int) -> tuple[float, float]:
    """beta must lie in [n^{1-t}, 1] for n probabilities summing to 1."""
    return float(n) ** (1 - t), 1.0


def _check_query(n: int, t: int, beta: float) -> float:
    if n < 2 or t < 2:
        raise ValueError(f"need n >= 2 and t >= 2, got n={n}, t={t}")
    lo, hi = admissible_range(n, t)
    if beta < lo - 1e-12 or beta > hi + 1e-12:
        raise ValueError(f"beta={beta} outside admissible [{lo}, {hi}] "
                         f"for n={n}, t={t}")
    return min(max(beta, lo), hi)


def _residual(n: int, t: int, beta: float, y: float) -> float:
    c = float(n - 1) ** (t - 1)
    return abs(y**t / beta + (1.0 - y) ** t / (c * beta) - 1.0)


def upsilon(n: int, t: int, beta: float, tol: float = 1e-12) -> UpsilonResult:
    """Maximal real root by guarded Newton iteration."""
    beta = _check_query(n, t, beta)
    lo, _ = admissible_range(n, t)
    c = float(n - 1) ** (t - 1)
    # exact corner cases: the floor gives 1/n, the ceiling gives 1
    if beta <= lo * (1.0 + 1e-14):
        return UpsilonResult(1.0 / n, "newton", _residual(n, t, beta, 1.0 / n), 0)
    if beta >= 1.0 - 1e-15:
        return UpsilonResult(1.0, "newton", 0.0, 0)

    def f(y: float) -> float:
        return c * (y**t - beta) + (1.0 - y) ** t

    def fp(y: float) -> float:
        return t * (c * y ** (t - 1) - (1.0 - y) ** (t - 1))

    ylo, yhi = 1.0 / n, beta ** (1.0 / t)   # f(ylo) <= 0 <= f(yhi)
    y = yhi
    for it in range(1, MAX_ITER + 1):
        fy = f(y)
        if fy > 0.0:
            yhi = y
        else:
            ylo = y
        d = fp(y)
        step_ok = d != 0.0
        if step_ok:
            ynew = y - fy / d
            step_ok = ylo <= ynew <= yhi
        if not step_ok:
            ynew = 0.5 * (ylo + yhi)
        if ynew == y or abs(ynew - y) < 1e-17 * max(1.0, abs(y)):
            y = ynew
            break
        y = ynew
    else:
        it = MAX_ITER
    res = _residual(n, t, beta, y)
    if res > max(tol, 1e-12):
        raise RuntimeError(f"Newton failed to converge: n={n}, t={t}, "
                           f"beta={beta}, residual={res}")
    return UpsilonResult(y, "newton", res, it)


def upsilon_closed_t2(n: int, beta: float) -> float:
    """Closed form for t = 2: (1 + sqrt(n-1) sqrt(n beta - 1)) / n."""
    beta = _check_query(n, 2, beta)
    return (1.0 + math.sqrt(n - 1.0) * math.sqrt(max(n * beta - 1.0, 0.0))) / n


def upsilon_closed_t3(n: int, beta: float) -> float:
    """Closed form for t = 3.

    n = 2 degenerates to the quadratic 3y^2 - 3y + 1 = beta; n >= 3 goes
    through the reduced cubic xi^3 + p xi + q = 0 solved by Cardano with
    principal complex cube roots (argument in (-pi, pi]).
    """
    beta = _check_query(n, 3, beta)
    if beta <= float(n) ** -2 * (1.0 + 1e-14):
        return 1.0 / n
    if n == 2:
        return 0.5 + math.sqrt(max(4.0 * beta - 1.0, 0.0) / 12.0)
    a = n * n - 2.0 * n
    p = -3.0 * (n - 1.0) ** 2 / a**2
    q = (3.0 * n * n - 6.0 * n + 2.0) / a**3 + (1.0 - (n - 1.0) ** 2 * beta) / a
    qq = (p / 3.0) ** 3 + (q / 2.0) ** 2
    sq = cmath.sqrt(complex(qq))
    xi = (-q / 2.0 + sq) ** (1.0 / 3.0) + (-q / 2.0 - sq) ** (1.0 / 3.0)
    y = xi.real - 1.0 / a
    # one Newton step scrubs the cancellation roundoff near Q ~ 0
    c = (n - 1.0) ** 2
    fp = 3.0 * (c * y * y - (1.0 - y) ** 2)
    if fp > 0.0:
        y -= (c * (y**3 - beta) + (1.0 - y) ** 3) / fp
    return y


def upsilon_nr1(n: int, t: int, beta: float) -> float:
    """One explicit Newton step from beta^{1/t}; a valid analytic upper
    estimate of the root (convexity keeps the tangent above it)."""
    beta = _check_query(n, t, beta)
    if beta >= 1.0 - 1e-15:
        return 1.0
    r = beta ** (1.0 / t)
    denom = t * (n - 1.0) ** (t - 1) * beta ** (1.0 - 1.0 / t) \
        - t * (1.0 - r) ** (t - 1)
    if denom <= 0.0:
        raise ValueError(f"degenerate Newton-step denominator for "
                         f"n={n}, t={t}, beta={beta}")
    return r - (1.0 - r) ** t / denom


def chi(k: int, t: int, beta: float) -> float:
    """Relative size of the one-step correction: the single-POVM improvement
    over the baseline min-entropy bound equals -ln(1 - chi) >= chi."""
    beta = _check_query(k, t, beta)
    r = beta ** (1.0 / t)
    denom = t * (k - 1.0) ** (t - 1) * beta ** (1.0 - 1.0 / t) \
        - t * (1.0 - r) ** (t - 1)
    if denom <= 0.0:
        raise ValueError(f"degenerate denominator for k={k}, t={t}, beta={beta}")
    return (1.0 - r) ** t / (r * denom)

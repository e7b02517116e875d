"""The set-valued map H induced by the frame soft shrinkage.

``y`` belongs to ``H(x)`` exactly when ``x = T^+ S_gamma T (x + y)``. Elements
are produced by a relaxed fixed-point iteration on

    f_x(t) = x + (I - T^+ S_gamma T) t,

whose fixed points ``t`` give ``y = t - x``. The map ``f_x`` is nonexpansive in
the T-norm and has a nonempty fixed point set, so the averaged iteration
``t <- (1 - beta) t + beta f_x(t)`` converges. Where ``H(x)`` is not a
singleton the element returned depends on ``beta`` and the start point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import ConsistencyError, DomainError, NoConvergenceError, RegionError
from .frame import FrameMatrix, _check_len, pinv_apply, t_inner, t_norm
from .shrinkage import as_config, frame_soft_shrink, residual_shrink

BOUNDARY_BAND = 1e-9


@dataclass(frozen=True)
class FixedPointConfig:
    beta: float = 0.5
    tol: float = 1e-11
    max_iters: int = 100_000

    def __post_init__(self):
        if not (0.0 < self.beta < 1.0):
            raise ValueError(f"beta must lie in (0, 1), got {self.beta}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if int(self.max_iters) < 1:
            raise ValueError(f"max_iters must be positive, got {self.max_iters}")


@dataclass(frozen=True)
class HElement:
    """One element ``y`` of ``H(x)`` with its fixed point ``t = x + y``."""

    x: np.ndarray
    y: np.ndarray
    t: np.ndarray
    residual: float
    iterations: int


@dataclass
class PropertyReport:
    """Pass/fail record of one numerical property check.

    ``passed`` is derived: a check passes iff ``measured <= bound`` (NaN fails).
    """

    name: str
    measured: float
    bound: float
    samples: int = 1
    details: dict[str, Any] = field(default_factory=dict)
    passed: bool = field(init=False)

    def __post_init__(self):
        self.measured = float(self.measured)
        self.bound = float(self.bound)
        self.passed = bool(self.measured <= self.bound)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "measured": self.measured,
            "bound": self.bound,
            "passed": self.passed,
            "samples": int(self.samples),
            "details": self.details,
        }


def aggregate(name, reports, **details) -> PropertyReport:
    """Fold per-sample reports into one.

    The aggregate measures the worst margin ``measured - bound`` against a
    bound of 0, which is associative and independent of sample order.
    """
    reports = list(reports)
    if not reports:
        return PropertyReport(name, 0.0, 0.0, samples=0, details=dict(details))
    margins = [r.measured - r.bound if not math.isnan(r.measured) else math.inf
               for r in reports]
    worst = int(np.argmax(margins))
    info = {
        "failures": sum(not r.passed for r in reports),
        "worst_measured": reports[worst].measured,
        "worst_bound": reports[worst].bound,
    }
    info.update(details)
    return PropertyReport(name, margins[worst], 0.0,
                          samples=sum(r.samples for r in reports), details=info)


def h_element(F: FrameMatrix, cfg, x, fp: FixedPointConfig | None = None) -> HElement:
    """Return one element of ``H(x)``.

    Runs ``t <- (1 - beta) t + beta f_x(t)`` from ``t = x`` until the T-norm of
    ``t - f_x(t)`` drops to ``fp.tol``.

    Raises
    ------
    NoConvergenceError
        After ``fp.max_iters`` steps; ``best`` holds the last ``HElement``.
    """
    fp = fp or FixedPointConfig()
    cfg = as_config(cfg)
    x = _check_len(x, F.cols, "x")
    if not np.all(np.isfinite(x)):
        raise ValueError("x must be finite")
    beta = fp.beta
    t = x.copy()
    res = math.inf
    for k in range(int(fp.max_iters) + 1):
        ft = x + residual_shrink(F, cfg, t)
        res = t_norm(F, t - ft)
        if res <= fp.tol:
            return HElement(x=x, y=t - x, t=t, residual=res, iterations=k)
        if k == fp.max_iters:
            break
        t = (1.0 - beta) * t + beta * ft
    best = HElement(x=x, y=t - x, t=t, residual=res, iterations=int(fp.max_iters))
    raise NoConvergenceError(
        f"fixed-point iteration stalled at residual {res:.3e} > {fp.tol:.1e}",
        best=best, residual=res)


def h_zero_membership(F: FrameMatrix, cfg, y, atol=0.0) -> bool:
    """Decide ``y in H(0)``.

    The operational test ``T^+ S_gamma T y == 0`` (up to ``atol`` in sup norm)
    is cross-checked against the analytic criterion ``||T y||_inf <= gamma``.
    Disagreement outside a ``1e-9`` band around the threshold raises
    :class:`ConsistencyError`; inside the band the operational answer wins.
    """
    cfg = as_config(cfg)
    y = _check_len(y, F.cols, "y")
    operational = bool(np.max(np.abs(frame_soft_shrink(F, cfg, y)), initial=0.0) <= atol)
    ty_inf = float(np.max(np.abs(F.entries @ y), initial=0.0))
    analytic = ty_inf <= cfg.gamma
    if operational != analytic and abs(ty_inf - cfg.gamma) > BOUNDARY_BAND:
        raise ConsistencyError(
            f"operational={operational} but ||Ty||_inf={ty_inf!r} vs gamma={cfg.gamma!r}")
    return operational


def in_single_valued_region(F: FrameMatrix, cfg, x) -> bool:
    """True iff ``min_j |(T x)_j| > gamma * (||T T^+||_inf + 1)``."""
    cfg = as_config(cfg)
    x = _check_len(x, F.cols, "x")
    return bool(np.min(np.abs(F.entries @ x)) > cfg.gamma * (F.rowsum_norm + 1.0))


def single_value_formula(F: FrameMatrix, cfg, x):
    """``gamma * T^+ sign(T x)``, the unique element of ``H(x)`` on the region
    where all analysis coefficients are large."""
    cfg = as_config(cfg)
    x = _check_len(x, F.cols, "x")
    if not in_single_valued_region(F, cfg, x):
        raise RegionError("x is outside the single-valued region of H")
    return cfg.gamma * pinv_apply(F, np.sign(F.entries @ x))


def cycle_sum(F: FrameMatrix, xs, ys) -> float:
    """``sum_i <x_{i+1} - x_i, y_i>_T`` with cyclic wraparound."""
    m = len(xs)
    return float(sum(t_inner(F, xs[(i + 1) % m] - xs[i], ys[i]) for i in range(m)))


def cyclic_monotonicity_check(F: FrameMatrix, cfg, points, fp=None, ys=None) -> PropertyReport:
    """Evaluate the cycle sum of H over ``points``.

    ``ys`` may supply subgradient elements computed elsewhere (e.g. from a
    closed form); by default they come from :func:`h_element`.
    """
    cfg = as_config(cfg)
    xs = [_check_len(p, F.cols, "point") for p in points]
    if len(xs) < 2:
        raise ValueError("a cycle needs at least two points")
    if ys is None:
        ys = [h_element(F, cfg, p, fp).y for p in xs]
    else:
        ys = [_check_len(y, F.cols, "y") for y in ys]
    total = cycle_sum(F, xs, ys)
    max_x = max(t_norm(F, p) for p in xs)
    max_y = max(t_norm(F, y) for y in ys)
    bound = 1e-8 * (1.0 + max_x * max_y)
    return PropertyReport(
        "cyclic_monotonicity", total, bound, samples=1,
        details={"m": len(xs), "max_tnorm_x": max_x, "max_tnorm_y": max_y})


def firm_nonexpansive_check(F: FrameMatrix, cfg, x, y) -> PropertyReport:
    """Slack of the firm nonexpansiveness inequality in the T-norm."""
    cfg = as_config(cfg)
    x = _check_len(x, F.cols, "x")
    y = _check_len(y, F.cols, "y")
    px = frame_soft_shrink(F, cfg, x)
    py = frame_soft_shrink(F, cfg, y)
    d2 = t_norm(F, x - y) ** 2
    slack = t_norm(F, px - py) ** 2 + t_norm(F, (x - px) - (y - py)) ** 2 - d2
    return PropertyReport("firm_nonexpansive", slack, 1e-9 * (1.0 + d2),
                          details={"tnorm_diff_sq": d2})


def _check_1d(c, gamma):
    if not c >= 1:
        raise DomainError(f"c must be >= 1, got {c}")
    if not gamma > 0:
        raise DomainError(f"gamma must be positive, got {gamma}")


def h_1d_breakpoint(c, gamma) -> float:
    return gamma * (c - 1.0) * c / (c * c + 1.0)


def h_1d_value(c, gamma, x) -> tuple[float, float]:
    """Closed form of ``H(x)`` for the frame ``T = (1, c)^T``.

    Returns ``(lo, hi)``; ``lo == hi`` except at ``x = 0`` where H is the
    interval ``[-gamma/c, gamma/c]``.
    """
    _check_1d(c, gamma)
    x = float(x)
    if x == 0.0:
        return (-gamma / c, gamma / c)
    if x < 0:
        lo, hi = h_1d_value(c, gamma, -x)
        return (-hi, -lo)
    if x <= h_1d_breakpoint(c, gamma):
        v = gamma / c + x / (c * c)
    else:
        v = gamma * (1.0 + c) / (1.0 + c * c)
    return (v, v)


def phi_1d_value(c, gamma, x) -> float:
    """Even convex potential whose derivative is :func:`h_1d_value`."""
    _check_1d(c, gamma)
    x = abs(float(x))
    xb = h_1d_breakpoint(c, gamma)
    if x <= xb:
        return gamma * x / c + x * x / (2.0 * c * c)
    return (gamma * (1.0 + c) / (1.0 + c * c) * x
            - gamma ** 2 * (c - 1.0) ** 2 / (2.0 * (c * c + 1.0) ** 2))

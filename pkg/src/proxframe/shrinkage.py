"""Componentwise soft shrinkage and the frame soft shrinkage ``T^+ S_gamma T``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteError
from .frame import FrameMatrix, _check_len, pinv_apply


@dataclass(frozen=True)
class ShrinkConfig:
    """Threshold ``gamma > 0`` of the soft shrinkage operator."""

    gamma: float

    def __post_init__(self):
        g = float(self.gamma)
        if not np.isfinite(g) or g <= 0:
            raise ValueError(f"gamma must be positive and finite, got {self.gamma}")
        object.__setattr__(self, "gamma", g)


def as_config(cfg) -> ShrinkConfig:
    return cfg if isinstance(cfg, ShrinkConfig) else ShrinkConfig(cfg)


def soft_shrink(z, cfg):
    """Soft shrinkage ``S_gamma``, applied componentwise.

    ``z_j - gamma`` above the threshold, ``z_j + gamma`` below ``-gamma`` and
    exactly ``0`` in the closed band ``[-gamma, gamma]``.
    """
    gamma = as_config(cfg).gamma
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)):
        raise NonFiniteError("soft_shrink input must be finite")
    out = np.zeros_like(z)
    hi = z > gamma
    lo = z < -gamma
    out[hi] = z[hi] - gamma
    out[lo] = z[lo] + gamma
    return out


def frame_soft_shrink(F: FrameMatrix, cfg, z):
    """Frame soft shrinkage ``T^+ S_gamma(T z)``.

    Returns the zero vector whenever ``||T z||_inf <= gamma``.
    """
    z = _check_len(z, F.cols, "z")
    return pinv_apply(F, soft_shrink(F.entries @ z, cfg))


def residual_shrink(F: FrameMatrix, cfg, z):
    """Complement ``z - T^+ S_gamma(T z)`` of the frame soft shrinkage.

    The result obeys ``||T * residual||_2 <= gamma * sqrt(L)`` for every z.
    """
    z = _check_len(z, F.cols, "z")
    return z - frame_soft_shrink(F, cfg, z)

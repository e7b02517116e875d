"""Frame transform matrices and the geometry they induce on R^N.

A frame matrix ``T`` is a tall real matrix (``L >= N``) with full column
rank. Its pseudo-inverse is applied through a thin SVD, and the inner product
``<x, y>_T = x^T T^T T y`` with norm ``||x||_T = ||T x||_2`` is exposed here
because every shrinkage property is stated in that geometry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthError, NonFiniteError, RankError, ShapeError

DEFAULT_RANK_TOL = 1e-10


@dataclass(frozen=True)
class RankTolerance:
    """Relative singular value cutoff used to reject rank-deficient input."""

    rank_tol: float = DEFAULT_RANK_TOL

    def __post_init__(self):
        if not (0.0 < self.rank_tol < 1.0):
            raise ValueError(f"rank_tol must lie in (0, 1), got {self.rank_tol}")


def _readonly(a):
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


class FrameMatrix:
    """Validated full-column-rank analysis operator with a cached SVD.

    Do not instantiate directly; use :func:`build_frame`.

    Attributes
    ----------
    entries : ndarray, shape (L, N)
    singular_values : ndarray, shape (N,)
        Nonincreasing.
    spectral_norm, sigma_min : float
        Largest and smallest singular values.
    rowsum_norm : float
        ``||T T^+||_inf``, the maximum absolute row sum of the range projector.
    """

    __slots__ = ("entries", "_u", "singular_values", "_vt", "spectral_norm",
                 "sigma_min", "rowsum_norm")

    def __init__(self, entries, u, s, vt):
        self.entries = _readonly(entries)
        self._u = _readonly(u)
        self.singular_values = _readonly(s)
        self._vt = _readonly(vt)
        self.spectral_norm = float(s[0])
        self.sigma_min = float(s[-1])
        proj = u @ u.T
        self.rowsum_norm = float(np.abs(proj).sum(axis=1).max())

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __repr__(self):
        return (f"FrameMatrix(L={self.rows}, N={self.cols}, "
                f"spectral_norm={self.spectral_norm:.6g}, sigma_min={self.sigma_min:.6g})")

    def apply(self, x):
        """Return ``T x``."""
        x = _check_len(x, self.cols, "x")
        return self.entries @ x

    def adjoint(self, z):
        """Return ``T^T z``."""
        z = _check_len(z, self.rows, "z")
        return self.entries.T @ z

    def pinv(self, z):
        """Return ``T^+ z``; see :func:`pinv_apply`."""
        return pinv_apply(self, z)

    def pinv_matrix(self):
        """Dense ``N x L`` Moore-Penrose inverse."""
        return (self._vt.T / self.singular_values) @ self._u.T

    def projector_matrix(self):
        """Dense ``L x L`` orthogonal projector ``T T^+`` onto range(T)."""
        return self._u @ self._u.T


def _check_len(v, n, name):
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.shape[0] != n:
        raise LengthError(f"{name} must be a vector of length {n}, got shape {v.shape}")
    return v


def build_frame(entries, tol=DEFAULT_RANK_TOL) -> FrameMatrix:
    """Validate ``entries`` and return a :class:`FrameMatrix`.

    Parameters
    ----------
    entries : array_like, shape (L, N)
        Real matrix with ``L >= N``. A 1-D array is read as a single column.
    tol : float or RankTolerance
        Relative rank tolerance: the smallest singular value must exceed
        ``tol * spectral_norm``.

    Raises
    ------
    ShapeError
        If ``L < N``, the input is not two-dimensional or it is complex.
    NonFiniteError
        If any entry is NaN or infinite.
    RankError
        If the matrix is numerically rank deficient.
    """
    rank_tol = tol.rank_tol if isinstance(tol, RankTolerance) else RankTolerance(float(tol)).rank_tol
    if np.iscomplexobj(entries):
        raise ShapeError("complex frames are not supported")
    T = np.asarray(entries, dtype=float)
    if T.ndim == 1:
        T = T[:, None]
    if T.ndim != 2 or T.size == 0:
        raise ShapeError(f"frame must be a nonempty 2-D matrix, got shape {T.shape}")
    L, N = T.shape
    if L < N:
        raise ShapeError(f"frame needs L >= N, got L={L}, N={N}")
    if not np.all(np.isfinite(T)):
        raise NonFiniteError("frame entries must be finite")
    u, s, vt = np.linalg.svd(T, full_matrices=False)
    if not s[0] > 0 or s[-1] <= rank_tol * s[0]:
        raise RankError(
            f"frame is rank deficient: sigma_min={s[-1]:.3e}, spectral_norm={s[0]:.3e}, "
            f"rank_tol={rank_tol:g}")
    return FrameMatrix(T, u, s, vt)


def pinv_apply(F: FrameMatrix, z):
    """Least-squares solution ``argmin_x ||T x - z||_2``, i.e. ``T^+ z``."""
    z = _check_len(z, F.rows, "z")
    return F._vt.T @ ((F._u.T @ z) / F.singular_values)


def t_inner(F: FrameMatrix, x, y) -> float:
    """``<x, y>_T = x^T (T^T T) y``."""
    x = _check_len(x, F.cols, "x")
    y = _check_len(y, F.cols, "y")
    return float(np.dot(F.entries @ x, F.entries @ y))


def t_norm(F: FrameMatrix, x) -> float:
    """``||x||_T = ||T x||_2``."""
    x = _check_len(x, F.cols, "x")
    return float(np.linalg.norm(F.entries @ x))


def projector_apply(F: FrameMatrix, z):
    """Orthogonal projection ``T T^+ z`` of ``z`` onto range(T)."""
    z = _check_len(z, F.rows, "z")
    return F._u @ (F._u.T @ z)

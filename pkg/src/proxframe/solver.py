"""Forward-backward splitting and the operators used to exercise it."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import NoConvergenceError, RankError, SizeError, StepSizeError
from .exact_prox import (ProxSolverConfig, _as_operator, _dual_projected_gradient,
                         operator_norm)
from .frame import FrameMatrix, build_frame
from .shrinkage import frame_soft_shrink


@dataclass
class ForwardModel:
    """Data term ``0.5 ||K x - f||^2``."""

    K: np.ndarray
    f: np.ndarray
    spectral_norm_K: float = field(init=False)

    def __post_init__(self):
        self.K = np.atleast_2d(np.asarray(self.K, dtype=float))
        self.f = np.asarray(self.f, dtype=float)
        if self.f.shape != (self.K.shape[0],):
            raise ValueError(f"f must have length {self.K.shape[0]}, got {self.f.shape}")
        self.spectral_norm_K = float(np.linalg.norm(self.K, 2))

    @classmethod
    def denoising(cls, f):
        f = np.asarray(f, dtype=float)
        return cls(np.eye(f.shape[0]), f)

    def data_fit(self, x) -> float:
        return float(0.5 * np.sum((self.K @ x - self.f) ** 2))


@dataclass
class BackwardStep:
    """The prox-like map applied after each gradient step.

    ``threshold`` is the shrinkage level used inside the step itself. For
    the exact kind it is the weight of ``||T.||_1`` in the prox, so with
    step size ``lam`` the iteration minimizes
    ``0.5 ||K x - f||^2 + (threshold / lam) ||T x||_1``. For the frame kind
    the same scaling is a modeling choice; frame shrinkage is a prox only in
    the T-geometry and has no closed-form potential.
    """

    kind: str
    operator: object
    threshold: float
    prox_cfg: ProxSolverConfig | None = None
    description: str = ""

    def __post_init__(self):
        if self.kind not in ("frame_shrink", "exact_prox"):
            raise ValueError(f"unknown backward kind {self.kind!r}")
        if not self.threshold > 0:
            raise ValueError(f"threshold must be positive, got {self.threshold}")
        if self.kind == "frame_shrink" and not isinstance(self.operator, FrameMatrix):
            self.operator = build_frame(self.operator)
        if self.kind == "exact_prox":
            self.prox_cfg = self.prox_cfg or ProxSolverConfig(tol=1e-12)
        if not self.description:
            self.description = f"{self.kind}(threshold={self.threshold:g})"

    @classmethod
    def frame_shrink(cls, frame, threshold):
        return cls("frame_shrink", frame, threshold)

    @classmethod
    def exact(cls, T, threshold, cfg=None):
        return cls("exact_prox", T, threshold, cfg)

    def analysis_matrix(self):
        op = self.operator
        return op.entries if isinstance(op, FrameMatrix) else op


@dataclass
class FbsTrace:
    iterates_norm_change: list[float] = field(default_factory=list)
    objective: list[float] = field(default_factory=list)
    converged: bool = False
    iterations: int = 0

    def to_dict(self) -> dict:
        return {
            "iterates_norm_change": [float(v) for v in self.iterates_norm_change],
            "objective": [float(v) for v in self.objective],
            "converged": self.converged,
            "iterations": self.iterations,
        }


def fbs_solve(model: ForwardModel, lam, backward: BackwardStep, tol=1e-10,
              max_iters=10_000, x0=None):
    """Forward-backward splitting for ``0.5 ||K x - f||^2 + Phi(x)``.

    Each step forms ``y = (I - lam K^T K) x + lam K^T f`` and applies the
    backward map to it. Iteration stops once
    ``||x_{j+1} - x_j||_2 <= tol (1 + ||x_j||_2)``; ``trace.iterations`` counts
    backward steps, including the one that detected the stop.

    Returns
    -------
    xhat : ndarray
    trace : FbsTrace
        ``objective`` is filled only for the exact-prox backward step, where
        ``Phi = (threshold / lam) ||T x||_1`` is known.

    Raises
    ------
    StepSizeError
        Unless ``0 < lam < 2 / ||K||_2^2``.
    NoConvergenceError
        After ``max_iters`` steps; carries the last iterate and the trace.
    """
    lam = float(lam)
    L = model.spectral_norm_K ** 2
    if not (lam > 0 and lam * L < 2.0):
        raise StepSizeError(f"step size must lie in (0, {2.0 / L:.6g}), got {lam}")
    N = model.K.shape[1]
    x = np.zeros(N) if x0 is None else np.asarray(x0, dtype=float).copy()
    if x.shape != (N,) or not np.all(np.isfinite(x)):
        raise ValueError(f"x0 must be a finite vector of length {N}")
    KtK = model.K.T @ model.K
    Ktf = model.K.T @ model.f
    trace = FbsTrace()

    if backward.kind == "exact_prox":
        T, Tt = _as_operator(backward.analysis_matrix())
        weight = backward.threshold / lam
        tnorm = operator_norm(T)
        cfg = backward.prox_cfg
        tau = cfg.tau if cfg.tau is not None else 1.0 / tnorm ** 2
        p = np.zeros(T.shape[0])

        def objective(v):
            return model.data_fit(v) + weight * float(np.sum(np.abs(T @ v)))

        def backward_map(v):
            nonlocal p
            run = _dual_projected_gradient(
                T, Tt, backward.threshold, v, tau, cfg.tol, cfg.max_iters,
                cfg.kkt_tol, cfg.gap_tol, p0=p)
            if not run.converged:
                raise NoConvergenceError(
                    f"inner prox stalled at KKT residual {run.kkt:.3e}", best=x, trace=trace)
            p = run.p
            return run.x

        trace.objective.append(objective(x))
    else:
        F = backward.operator

        def backward_map(v):
            return frame_soft_shrink(F, backward.threshold, v)

    for j in range(int(max_iters)):
        y = x - lam * (KtK @ x) + lam * Ktf
        x_new = backward_map(y)
        change = float(np.linalg.norm(x_new - x))
        trace.iterates_norm_change.append(change)
        if backward.kind == "exact_prox":
            trace.objective.append(objective(x_new))
        stop = change <= tol * (1.0 + np.linalg.norm(x))
        x = x_new
        trace.iterations = j + 1
        if stop:
            trace.converged = True
            return x, trace
    raise NoConvergenceError(
        f"forward-backward splitting did not converge in {max_iters} iterations",
        best=x, trace=trace)


def tv_matrix_sparse(n1, n2) -> sp.csr_matrix:
    """Anisotropic TV difference operator as a sparse matrix.

    The image ``X`` (``n1 x n2``) is vectorized column-major,
    ``x[j + n1 * k] = X[j, k]``. Rows list all vertical differences
    ``X[j+1, k] - X[j, k]`` first, then all horizontal differences
    ``X[j, k+1] - X[j, k]``, both in column-major order.
    """
    n1, n2 = int(n1), int(n2)
    if n1 < 2 or n2 < 2:
        raise SizeError(f"TV operator needs n1, n2 >= 2, got ({n1}, {n2})")
    d1 = sp.diags([-np.ones(n1 - 1), np.ones(n1 - 1)], [0, 1], shape=(n1 - 1, n1))
    d2 = sp.diags([-np.ones(n2 - 1), np.ones(n2 - 1)], [0, 1], shape=(n2 - 1, n2))
    vert = sp.kron(sp.identity(n2), d1)
    horiz = sp.kron(d2, sp.identity(n1))
    D = sp.vstack([vert, horiz]).tocsr()
    D.eliminate_zeros()
    return D


def tv_matrix(n1, n2) -> np.ndarray:
    """Dense version of :func:`tv_matrix_sparse`, shape
    ``(2 n1 n2 - n1 - n2, n1 n2)``."""
    return tv_matrix_sparse(n1, n2).toarray()


def tv_triplets(n1, n2):
    """``(rows, cols, values)`` of the nonzeros of the TV operator."""
    coo = tv_matrix_sparse(n1, n2).tocoo()
    return coo.row, coo.col, coo.data


def anisotropic_tv(image) -> float:
    image = np.asarray(image, dtype=float)
    return float(np.abs(np.diff(image, axis=0)).sum() + np.abs(np.diff(image, axis=1)).sum())


_GALLERY_ALIASES = {
    "toy1d": "toy_1d",
    "toy_1d": "toy_1d",
    "parseval": "parseval",
    "random": "random_full_rank",
    "random_full_rank": "random_full_rank",
    "identity": "identity",
}


def frame_gallery(kind, **params) -> FrameMatrix:
    """Build a named test frame.

    ``toy_1d(c)``
        The column ``(1, c)^T``.
    ``parseval(l, n, seed=0)``
        ``l x n`` matrix with orthonormal columns, so ``T^T T = I``.
    ``random_full_rank(l, n, seed=0)``
        Gaussian entries; reseeds (up to 10 times) if rank deficient.
    ``identity(n)``
    """
    try:
        kind = _GALLERY_ALIASES[kind]
    except KeyError:
        raise ValueError(f"unknown gallery kind {kind!r}") from None
    if kind == "toy_1d":
        c = float(params.get("c", 2.0))
        return build_frame([[1.0], [c]])
    if kind == "identity":
        return build_frame(np.eye(int(params["n"])))
    L, N = int(params["l"]), int(params["n"])
    seed = int(params.get("seed", 0))
    if L < N or N < 1:
        raise ValueError(f"gallery frame needs l >= n >= 1, got l={L}, n={N}")
    if kind == "parseval":
        rng = np.random.default_rng(seed)
        q, r = np.linalg.qr(rng.standard_normal((L, N)))
        return build_frame(q * np.sign(np.diag(r)))
    last = None
    for attempt in range(10):
        rng = np.random.default_rng(seed + attempt)
        try:
            return build_frame(rng.standard_normal((L, N)))
        except RankError as err:
            last = err
    raise last


def parse_gallery_spec(spec: str):
    """Split ``"kind:key=value,..."`` into ``(kind, params)``."""
    kind, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"malformed gallery parameter {item!r} in {spec!r}")
        params[key.strip()] = float(value) if key.strip() == "c" else int(value)
    return kind.strip(), params


def gallery_from_spec(spec: str) -> FrameMatrix:
    kind, params = parse_gallery_spec(spec)
    return frame_gallery(kind, **params)

"""Reference solutions computed by routes independent of the package."""

import numpy as np


def cvx_analysis_prox(T, gamma, y):
    """argmin 0.5||y - x||^2 + gamma ||T x||_1 via a conic solver."""
    cp = __import__("cvxpy")
    x = cp.Variable(len(y))
    obj = 0.5 * cp.sum_squares(y - x) + gamma * cp.norm1(T @ x)
    cp.Problem(cp.Minimize(obj)).solve(solver="CLARABEL", tol_gap_abs=1e-12,
                                       tol_gap_rel=1e-12, tol_feas=1e-12)
    return np.asarray(x.value)


def cvx_analysis_lasso(K, f, gamma, T):
    """argmin 0.5||K x - f||^2 + gamma ||T x||_1."""
    cp = __import__("cvxpy")
    x = cp.Variable(K.shape[1])
    obj = 0.5 * cp.sum_squares(K @ x - f) + gamma * cp.norm1(T @ x)
    cp.Problem(cp.Minimize(obj)).solve(solver="CLARABEL", tol_gap_abs=1e-12,
                                       tol_gap_rel=1e-12, tol_feas=1e-12)
    return np.asarray(x.value)


def loop_tv(image):
    """Forward differences with explicit loops: vertical then horizontal."""
    n1, n2 = image.shape
    vert = [image[i + 1, j] - image[i, j] for j in range(n2) for i in range(n1 - 1)]
    horiz = [image[i, j + 1] - image[i, j] for j in range(n2 - 1) for i in range(n1)]
    return np.array(vert + horiz)

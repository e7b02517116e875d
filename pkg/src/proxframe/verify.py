"""Randomized property suites for the frame shrinkage and its subgradient map.

Each suite draws its samples from ``numpy.random.SeedSequence(seed)``, so a
fixed seed reproduces the same reports. Samples are independent and may be
evaluated on a thread pool; results are gathered in sample order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import ConsistencyError, NoConvergenceError, RankError
from .exact_prox import (ProxSolverConfig, analysis_objective, compare_shrink_vs_prox,
                         exact_prox, kkt_certificate)
from .frame import FrameMatrix, build_frame, t_norm
from .shrinkage import frame_soft_shrink, residual_shrink, soft_shrink
from .solver import BackwardStep, ForwardModel, fbs_solve, frame_gallery, tv_matrix
from .subgradient import (BOUNDARY_BAND, FixedPointConfig, PropertyReport, aggregate,
                          cycle_sum, cyclic_monotonicity_check, firm_nonexpansive_check,
                          h_1d_breakpoint, h_1d_value, h_element, h_zero_membership,
                          phi_1d_value, single_value_formula)

GAMMAS = (0.1, 1.0, 10.0)
SUITES = ("firm_nonexpansive", "cyclic", "h_zero", "single_valued", "oneD",
          "prox_baseline", "fbs")
DEFAULT_SAMPLES = {
    "firm_nonexpansive": 1000,
    "cyclic": 500,
    "h_zero": 1000,
    "single_valued": 200,
    "oneD": 1001,
    "prox_baseline": 100,
    "fbs": 50,
}


def thread_count() -> int:
    env = os.environ.get("PROXFRAME_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _pmap(fn, items, threads=None):
    threads = thread_count() if threads is None else threads
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _rngs(seed, n):
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


def random_frame(rng, max_n, max_l, l_factor=None, max_cond=None) -> FrameMatrix:
    """Gaussian frame with ``1 <= N <= max_n`` and ``N <= L <= max_l``.

    ``max_cond`` redraws until ``spectral_norm / sigma_min`` is within bounds.
    """
    for _ in range(10 if max_cond is None else 1000):
        n = int(rng.integers(1, max_n + 1))
        hi = max_l if l_factor is None else min(max_l, l_factor * n)
        l = int(rng.integers(n, max(n, hi) + 1))
        try:
            F = build_frame(rng.standard_normal((l, n)))
        except RankError:
            continue
        if max_cond is None or F.spectral_norm <= max_cond * F.sigma_min:
            return F
    raise RankError("could not draw an admissible frame")


def _bounded_report(name, F, gamma, ys):
    """``||T y||_2 <= gamma sqrt(L) + 1e-9`` for every y, with the Euclidean
    ratio ``||y||_2 / (gamma sqrt(L) ||T||_2)`` reported alongside."""
    reps = []
    ratio = 0.0
    for y in ys:
        radius = gamma * math.sqrt(F.rows)
        reps.append(PropertyReport(name, t_norm(F, y), radius + 1e-9))
        ratio = max(ratio, float(np.linalg.norm(y)) / (radius * F.spectral_norm))
    return reps, ratio


# -- shrinkage ---------------------------------------------------------------

def suite_firm_nonexpansive(seed=0, samples=None, frame=None, threads=None):
    samples = DEFAULT_SAMPLES["firm_nonexpansive"] if samples is None else samples

    def one(rng):
        F = frame if frame is not None else random_frame(rng, 16, 64)
        gamma = float(rng.choice(GAMMAS))
        scale = gamma * float(rng.choice([0.3, 1.0, 3.0, 30.0])) / F.spectral_norm
        x = scale * rng.standard_normal(F.cols)
        y = x + scale * float(rng.choice([0.01, 0.3, 1.0, 3.0])) * rng.standard_normal(F.cols)
        firm = firm_nonexpansive_check(F, gamma, x, y)
        d = t_norm(F, x - y)
        px, py = frame_soft_shrink(F, gamma, x), frame_soft_shrink(F, gamma, y)
        ne_p = PropertyReport("nonexpansive_shrink", t_norm(F, px - py), d + 1e-9 * (1 + d))
        ne_r = PropertyReport("nonexpansive_residual", t_norm(F, (x - px) - (y - py)),
                              d + 1e-9 * (1 + d))
        rb = PropertyReport("residual_bound", t_norm(F, residual_shrink(F, gamma, x)),
                            gamma * math.sqrt(F.rows) * (1 + 1e-12))
        odd = PropertyReport("odd_symmetry",
                             float(np.max(np.abs(frame_soft_shrink(F, gamma, -x) + px))),
                             1e-15 * (1 + float(np.max(np.abs(px)))))
        return firm, ne_p, ne_r, rb, odd

    out = _pmap(one, _rngs(seed, samples), threads)
    names = ["firm_nonexpansive", "nonexpansive_shrink", "nonexpansive_residual",
             "residual_bound", "odd_symmetry"]
    return [aggregate(n, [o[i] for o in out]) for i, n in enumerate(names)]


# -- subgradient map ---------------------------------------------------------

def suite_cyclic(seed=0, samples=None, frame=None, threads=None, n_frames=20,
                 fp: FixedPointConfig | None = None):
    """Cycle sums over random cycles of length 2..6 spread over ``n_frames``
    random frames, plus the defining identity and the boundedness of every
    subgradient element computed on the way."""
    samples = DEFAULT_SAMPLES["cyclic"] if samples is None else samples
    frng = np.random.default_rng(np.random.SeedSequence(seed).generate_state(1)[0])
    if frame is not None:
        frames = [(frame, float(frng.choice(GAMMAS)))]
    else:
        frames = [(random_frame(frng, 6, 16, l_factor=3), float(frng.choice(GAMMAS)))
                  for _ in range(n_frames)]

    def one(args):
        idx, rng = args
        F, gamma = frames[idx % len(frames)]
        m = int(rng.integers(2, 7))
        scale = gamma * float(rng.choice([0.2, 1.0, 3.0])) / F.spectral_norm
        base = scale * rng.standard_normal(F.cols)
        pts = [base + scale * float(rng.choice([0.1, 1.0])) * rng.standard_normal(F.cols)
               for _ in range(m)]
        elems = [h_element(F, gamma, p, fp) for p in pts]
        cyc = cyclic_monotonicity_check(F, gamma, pts, ys=[e.y for e in elems])
        ident = [PropertyReport("defining_identity",
                                float(np.max(np.abs(frame_soft_shrink(F, gamma, e.x + e.y) - e.x))),
                                1e-9) for e in elems]
        bnd, ratio = _bounded_report("boundedness", F, gamma, [e.y for e in elems])
        return cyc, ident, bnd, ratio

    out = _pmap(one, enumerate(_rngs(seed, samples)), threads)
    return [
        aggregate("cyclic_monotonicity", [o[0] for o in out], frames=len(frames)),
        aggregate("defining_identity", [r for o in out for r in o[1]]),
        aggregate("boundedness", [r for o in out for r in o[2]],
                  euclidean_ratio_max=max(o[3] for o in out)),
    ]


def suite_h_zero(seed=0, samples=None, frame=None, threads=None):
    """Operational versus analytic membership in H(0); half of the samples
    fall inside ``||T y||_inf <= gamma``, half outside, none within 1e-9 of
    the threshold."""
    samples = DEFAULT_SAMPLES["h_zero"] if samples is None else samples

    def one(args):
        i, rng = args
        F = frame if frame is not None else random_frame(rng, 8, 24)
        gamma = float(rng.choice(GAMMAS)) * float(rng.uniform(0.5, 2.0))
        d = rng.standard_normal(F.cols)
        level = float(np.max(np.abs(F.entries @ d)))
        if level == 0.0:
            d, level = np.ones(F.cols), float(np.max(np.abs(F.entries @ np.ones(F.cols))))
        u = rng.uniform(0.0, 1.0) if i % 2 == 0 else rng.uniform(1.0, 3.0)
        y = d * (gamma * u / level)
        ty = float(np.max(np.abs(F.entries @ y)))
        if abs(ty - gamma) <= BOUNDARY_BAND:
            y = y * (1.0 + 1e-6 if ty > gamma else 1.0 - 1e-6)
            ty = float(np.max(np.abs(F.entries @ y)))
        analytic = ty <= gamma
        try:
            op = h_zero_membership(F, gamma, y)
            bad = op != analytic
        except ConsistencyError:
            bad = True
        return PropertyReport("h_zero_agreement", float(bad), 0.0,
                              details={"inside": analytic})

    out = _pmap(one, enumerate(_rngs(seed, samples)), threads)
    inside = sum(r.details["inside"] for r in out)
    return [PropertyReport("h_zero_agreement", sum(r.measured for r in out), 0.0,
                           samples=len(out),
                           details={"inside": inside, "outside": len(out) - inside})]


def sample_single_valued_point(F, gamma, rng):
    """Random x with every ``|(T x)_j|`` above ``gamma (||T T^+||_inf + 1)``."""
    while True:
        d = rng.standard_normal(F.cols)
        low = float(np.min(np.abs(F.entries @ d)))
        if low > 1e-3 * float(np.max(np.abs(F.entries @ d))):
            break
    need = gamma * (F.rowsum_norm + 1.0)
    return d * (need / low) * (1.0 + float(rng.uniform(1e-3, 1.0)))


def suite_single_valued(seed=0, samples=None, frame=None, threads=None, n_frames=10,
                        fp: FixedPointConfig | None = None):
    samples = DEFAULT_SAMPLES["single_valued"] if samples is None else samples
    frng = np.random.default_rng(np.random.SeedSequence(seed).generate_state(2)[1])
    if frame is not None:
        frames = [(frame, float(frng.choice(GAMMAS)))]
    else:
        frames = [(random_frame(frng, 6, 16, l_factor=3), float(frng.choice(GAMMAS)))
                  for _ in range(n_frames)]

    def one(args):
        idx, rng = args
        F, gamma = frames[idx % len(frames)]
        x = sample_single_valued_point(F, gamma, rng)
        y = single_value_formula(F, gamma, x)
        ident = PropertyReport("single_valued_identity",
                               float(np.max(np.abs(frame_soft_shrink(F, gamma, x + y) - x))),
                               1e-9)
        e = h_element(F, gamma, x, fp)
        fixed = PropertyReport("single_valued_fixed_point", t_norm(F, e.y - y), 1e-7)
        bnd, ratio = _bounded_report("boundedness", F, gamma, [y, e.y])
        return ident, fixed, bnd, ratio

    out = _pmap(one, enumerate(_rngs(seed, samples)), threads)

    # Parseval frames: gamma T^+ sign(Tx) coincides with gamma T^T sign(Tx).
    def parseval(rng):
        n = int(rng.integers(1, 7))
        F = frame_gallery("parseval", l=int(rng.integers(n, 3 * n + 1)), n=n,
                          seed=int(rng.integers(2 ** 31)))
        gamma = float(rng.choice(GAMMAS))
        x = sample_single_valued_point(F, gamma, rng)
        diff = single_value_formula(F, gamma, x) - gamma * F.entries.T @ np.sign(F.entries @ x)
        return PropertyReport("parseval_comparison", float(np.max(np.abs(diff))),
                              1e-12 * (1 + gamma))

    par = _pmap(parseval, _rngs(seed + 1, max(1, samples // 4)), threads)
    return [
        aggregate("single_valued_identity", [o[0] for o in out], frames=len(frames)),
        aggregate("single_valued_fixed_point", [o[1] for o in out]),
        aggregate("boundedness", [r for o in out for r in o[2]],
                  euclidean_ratio_max=max(o[3] for o in out)),
        aggregate("parseval_comparison", par),
    ]


ONE_D_C = (1.0, 1.5, 2.0, 10.0)
ONE_D_GAMMA = (0.1, 5.0 / 3.0, 3.0)


def one_d_grid(c, gamma, points=1001):
    """Symmetric grid through 0 reaching well past the breakpoint."""
    reach = 3.0 * max(h_1d_breakpoint(c, gamma), gamma)
    return np.linspace(-reach, reach, points)


def suite_oneD(seed=0, samples=None, frame=None, threads=None,
               fp: FixedPointConfig | None = None):
    """Closed-form checks on the frames ``(1, c)^T``.

    ``samples`` sets the grid size (default 1001); ``seed`` and ``frame`` are
    not used since every check is deterministic.
    """
    points = DEFAULT_SAMPLES["oneD"] if samples is None else samples
    combos = [(c, g) for c in ONE_D_C for g in ONE_D_GAMMA]

    def one(cg):
        c, gamma = cg
        F = frame_gallery("toy_1d", c=c)
        grid = one_d_grid(c, gamma, points)
        h_dev, conv, bracket, prox_gap, ys = [], [], [], [], []
        for x in grid:
            lo, hi = h_1d_value(c, gamma, x)
            y = h_element(F, gamma, np.array([x]), fp).y
            ys.append(y)
            h_dev.append(max(lo - y[0], y[0] - hi, 0.0))
        phi = np.array([phi_1d_value(c, gamma, x) for x in grid])
        for a, b in zip(grid[:-2], grid[2:]):
            mid = phi_1d_value(c, gamma, 0.5 * (a + b))
            conv.append(mid - 0.5 * (phi_1d_value(c, gamma, a) + phi_1d_value(c, gamma, b)))
        delta = 1e-5 * (grid[1] - grid[0])
        for x in grid:
            lo, hi = h_1d_value(c, gamma, x)
            p0 = phi_1d_value(c, gamma, x)
            left = (p0 - phi_1d_value(c, gamma, x - delta)) / delta
            right = (phi_1d_value(c, gamma, x + delta) - p0) / delta
            bracket.append(max(left - lo, hi - right))
        for z in grid:
            xhat = frame_soft_shrink(F, gamma, np.array([z]))[0]
            obj_hat = 0.5 * (z - xhat) ** 2 + phi_1d_value(c, gamma, xhat)
            obj_grid = 0.5 * (z - grid) ** 2 + phi
            prox_gap.append(obj_hat - float(obj_grid.min()))
        xb = h_1d_breakpoint(c, gamma)
        left_b = gamma * xb / c + xb * xb / (2 * c * c)
        right_b = (gamma * (1 + c) / (1 + c * c) * xb
                   - gamma ** 2 * (c - 1) ** 2 / (2 * (c * c + 1) ** 2))
        bnd, ratio = _bounded_report("boundedness", F, gamma, ys)
        fd_tol = 1e-6 * (1 + gamma)
        return (PropertyReport("oneD_h_element", max(h_dev), 1e-7, samples=len(grid)),
                PropertyReport("oneD_phi_convex", max(conv), 1e-12 * (1 + phi.max()),
                               samples=len(conv)),
                PropertyReport("oneD_phi_subgradient", max(bracket), fd_tol,
                               samples=len(grid)),
                PropertyReport("oneD_prox_identity", max(prox_gap),
                               1e-12 * (1 + phi.max()), samples=len(grid)),
                PropertyReport("oneD_phi_continuity", abs(left_b - right_b), 1e-12),
                bnd, ratio)

    out = _pmap(one, combos, threads)
    names = ["oneD_h_element", "oneD_phi_convex", "oneD_phi_subgradient",
             "oneD_prox_identity", "oneD_phi_continuity"]
    reports = [aggregate(n, [o[i] for o in out], combos=len(combos))
               for i, n in enumerate(names)]

    # Cycle sums with the closed form in place of the fixed-point solver.
    rng = np.random.default_rng(seed)
    F2, g2 = frame_gallery("toy_1d", c=2.0), 5.0 / 3.0
    cyc = []
    for _ in range(100):
        xs = [np.array([v]) for v in rng.uniform(-2.0, 2.0, 5)]
        ys = [np.array([h_1d_value(2.0, g2, x[0])[1 if x[0] == 0 else 0]]) for x in xs]
        cyc.append(cyclic_monotonicity_check(F2, g2, xs, ys=ys))
    reports.append(aggregate("oneD_cyclic_closed_form", cyc))
    reports.append(aggregate("boundedness", [r for o in out for r in o[5]],
                             euclidean_ratio_max=max(o[6] for o in out)))
    return reports


# -- exact prox baseline -----------------------------------------------------

def random_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def suite_prox_baseline(seed=0, samples=None, frame=None, threads=None, perturbations=20,
                        cfg: ProxSolverConfig | None = None):
    """Exactness of the iterative analysis-l1 prox and the comparison with
    frame shrinkage on Parseval frames."""
    samples = DEFAULT_SAMPLES["prox_baseline"] if samples is None else samples

    def orth(rng):
        n = int(rng.integers(1, 9))
        T = random_orthogonal(rng, n)
        gamma = float(rng.choice(GAMMAS))
        y = gamma * 2.0 * rng.standard_normal(n)
        x = exact_prox(T, gamma, y, cfg).minimizer
        return PropertyReport("prox_orthogonal",
                              float(np.max(np.abs(x - T.T @ soft_shrink(T @ y, gamma)))), 1e-8)

    def general(rng):
        if frame is not None:
            T = frame.entries
        else:
            n = int(rng.integers(1, 9))
            T = rng.standard_normal((int(rng.integers(1, 2 * n + 1)), n))
        n = T.shape[1]
        gamma = float(rng.choice(GAMMAS))
        y = gamma * float(rng.choice([0.5, 2.0, 5.0])) * rng.standard_normal(n)
        res = exact_prox(T, gamma, y, cfg, record_objective=True)
        x = res.minimizer
        reps = [PropertyReport("prox_kkt", res.kkt_residual, 1e-7),
                PropertyReport("prox_dual_feasible", float(np.max(np.abs(res.dual))),
                               gamma + 1e-12),
                PropertyReport("prox_dual_relation",
                               float(np.max(np.abs(x - (y - T.T @ res.dual)))), 1e-10)]
        tr = np.asarray(res.dual_trace)
        rise = np.diff(tr) if tr.size > 1 else np.zeros(1)
        reps.append(PropertyReport("prox_dual_objective_monotone", float(rise.max()),
                                   1e-12 * (1 + abs(tr[0]))))
        sc = []
        for _ in range(perturbations):
            xt = x + float(rng.choice([1e-3, 0.1, 1.0])) * gamma * rng.standard_normal(n)
            gap = analysis_objective(T, gamma, y, xt) - res.primal_obj
            sc.append(np.sum((x - xt) ** 2) - 2.0 * gap)
        reps.append(PropertyReport("prox_strong_convexity", max(sc),
                                   1e-8 * (1 + abs(res.primal_obj)), samples=perturbations))
        try:
            F = build_frame(T)
        except Exception:
            F = None
        if F is not None:
            obj_fs = analysis_objective(T, gamma, y, frame_soft_shrink(F, gamma, y))
            reps.append(PropertyReport("prox_below_frame_shrink", res.primal_obj - obj_fs,
                                       1e-10 * (1 + abs(obj_fs))))
        return reps

    def parseval(rng):
        n = int(rng.integers(1, 9))
        l = int(rng.integers(n, 3 * n + 1))
        F = frame_gallery("parseval", l=l, n=n, seed=int(rng.integers(2 ** 31)))
        gamma = float(rng.choice(GAMMAS))
        mode = rng.integers(3)
        y = gamma * 2.0 * rng.standard_normal(n)
        if mode == 0:
            y *= gamma * float(rng.uniform(0.05, 0.99)) / float(np.max(np.abs(F.entries @ y)))
        cmp = compare_shrink_vs_prox(F, gamma, y, cfg)
        reps = [PropertyReport("approx_objective_gap", cmp.obj_prox - cmp.obj_shrink,
                               1e-10 * (1 + abs(cmp.obj_shrink)))]
        dead = float(np.max(np.abs(F.entries @ y))) <= gamma
        if dead or l == n:
            reps.append(PropertyReport("approx_zero_distance", cmp.dist_l2, 1e-8))
        return reps

    o = _pmap(orth, _rngs(seed, samples), threads)
    g = _pmap(general, _rngs(seed + 1, samples), threads)
    p = _pmap(parseval, _rngs(seed + 2, samples), threads)
    flat_g = [r for reps in g for r in reps]
    flat_p = [r for reps in p for r in reps]
    names_g = ["prox_kkt", "prox_dual_feasible", "prox_dual_relation",
               "prox_dual_objective_monotone", "prox_strong_convexity", "prox_below_frame_shrink"]
    return ([aggregate("prox_orthogonal", o)]
            + [aggregate(n, [r for r in flat_g if r.name == n]) for n in names_g]
            + [aggregate(n, [r for r in flat_p if r.name == n])
               for n in ("approx_objective_gap", "approx_zero_distance")])


# -- forward-backward splitting ----------------------------------------------

def well_conditioned(rng, n, cond=3.0):
    """Square matrix with singular values spread over ``[1, cond]``."""
    u = random_orthogonal(rng, n)
    v = random_orthogonal(rng, n)
    return (u * np.linspace(1.0, cond, n)) @ v.T


def suite_fbs(seed=0, samples=None, frame=None, threads=None):
    samples = DEFAULT_SAMPLES["fbs"] if samples is None else samples
    reports = []

    rng = np.random.default_rng(seed)
    F = frame if frame is not None else random_frame(rng, 8, 24)
    f = 3.0 * rng.standard_normal(F.cols)
    gamma = 1.0
    x, tr = fbs_solve(ForwardModel.denoising(f), 1.0, BackwardStep.frame_shrink(F, gamma))
    direct = frame_soft_shrink(F, gamma, f)
    one_step = tr.iterates_norm_change[1] if len(tr.iterates_norm_change) > 1 else math.inf
    reports.append(PropertyReport("fbs_identity_one_step",
                                  float(np.max(np.abs(x - direct))) + one_step, 0.0,
                                  details={"iterations": tr.iterations}))

    def frame_case(r):
        # Frame shrinkage is a prox in the T-geometry only; convergence is
        # observed for well-conditioned frames, not guaranteed in general.
        Fr = frame if frame is not None else random_frame(r, 8, 24, max_cond=10.0)
        n = Fr.cols
        K = well_conditioned(r, n)
        f = K @ r.standard_normal(n) + 0.1 * r.standard_normal(n)
        model = ForwardModel(K, f)
        lam = float(r.uniform(0.2, 1.8)) / model.spectral_norm_K ** 2
        thr = lam * float(r.choice([0.1, 0.5]))
        try:
            xs, trace = fbs_solve(model, lam, BackwardStep.frame_shrink(Fr, thr),
                                  tol=1e-10, max_iters=100_000)
        except NoConvergenceError:
            return (PropertyReport("fbs_frame_converges", 1.0, 0.0),
                    PropertyReport("fbs_frame_fixed_point", math.inf, 0.0))
        resid = xs - frame_soft_shrink(Fr, thr, xs - lam * K.T @ (K @ xs - f))
        return (PropertyReport("fbs_frame_converges", 0.0, 0.0,
                               details={"iterations": trace.iterations}),
                PropertyReport("fbs_frame_fixed_point", float(np.linalg.norm(resid)),
                               1e-8 * (1 + float(np.linalg.norm(xs)))))

    out = _pmap(frame_case, _rngs(seed + 1, samples), threads)
    reports.append(aggregate("fbs_frame_converges", [o[0] for o in out]))
    reports.append(aggregate("fbs_frame_fixed_point", [o[1] for o in out]))

    r = np.random.default_rng(seed + 2)
    K = well_conditioned(r, 8)
    f = K @ r.standard_normal(8)
    model = ForwardModel(K, f)
    lam = 1.0 / model.spectral_norm_K ** 2
    T = r.standard_normal((12, 8))
    xs, trace = fbs_solve(model, lam, BackwardStep.exact(T, lam * 0.5), tol=1e-12,
                          max_iters=10_000)
    rises = np.diff(trace.objective)
    reports.append(PropertyReport("fbs_exact_objective_monotone", float(rises.max()), 1e-10))
    reports.append(PropertyReport("fbs_exact_change", trace.iterates_norm_change[-1], 1e-8,
                                  details={"iterations": trace.iterations}))

    tv = tv_matrix(4, 4)
    try:
        BackwardStep.frame_shrink(tv, 0.1)
        rejected = False
    except RankError:
        rejected = True
    reports.append(PropertyReport("fbs_tv_frame_rejected", float(not rejected), 0.0))
    return reports


_SUITE_FUNCS = {
    "firm_nonexpansive": suite_firm_nonexpansive,
    "cyclic": suite_cyclic,
    "h_zero": suite_h_zero,
    "single_valued": suite_single_valued,
    "oneD": suite_oneD,
    "prox_baseline": suite_prox_baseline,
    "fbs": suite_fbs,
}


def run_suite(name, seed=0, samples=None, frame=None, threads=None):
    """Run one named suite, or every suite for ``name == "all"``."""
    if name == "all":
        return [r for n in SUITES for r in run_suite(n, seed, samples, frame, threads)]
    try:
        fn = _SUITE_FUNCS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all") from None
    return fn(seed=seed, samples=samples, frame=frame, threads=threads)

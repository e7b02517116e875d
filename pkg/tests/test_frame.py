import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proxframe import (LengthError, NonFiniteError, RankError, RankTolerance, ShapeError,
                       build_frame, pinv_apply, projector_apply, t_inner, t_norm)


def test_toy_frame_spectral_data():
    F = build_frame([[1.0], [2.0]])
    assert F.rows == 2 and F.cols == 1
    assert F.spectral_norm == pytest.approx(np.sqrt(5.0), abs=1e-14)
    assert F.sigma_min == pytest.approx(np.sqrt(5.0), abs=1e-14)


def test_identity_pinv_is_identity():
    F = build_frame(np.eye(2))
    z = np.array([0.3, -1.7])
    np.testing.assert_array_almost_equal(pinv_apply(F, z), z, decimal=15)


@pytest.mark.parametrize("entries, err", [
    ([[1.0, 1.0], [2.0, 2.0]], RankError),
    ([[1.0, 2.0]], ShapeError),
    ([[1.0], [np.nan]], NonFiniteError),
    ([[1.0], [np.inf]], NonFiniteError),
    (np.array([[1 + 1j], [2.0]]), ShapeError),
])
def test_build_frame_rejects(entries, err):
    with pytest.raises(err):
        build_frame(entries)


def test_rank_tolerance_bounds():
    with pytest.raises(ValueError):
        RankTolerance(0.0)
    with pytest.raises(ValueError):
        RankTolerance(1.0)
    # a nearly singular frame passes a loose cutoff only when it is loose enough
    T = np.array([[1.0, 0.0], [0.0, 1e-6], [0.0, 0.0]])
    build_frame(T, tol=1e-8)
    with pytest.raises(RankError):
        build_frame(T, tol=RankTolerance(1e-5))


def test_pinv_toy_value():
    F = build_frame([[1.0], [2.0]])
    assert pinv_apply(F, np.array([0.0, 1.0 / 3.0]))[0] == pytest.approx(2.0 / 15.0, abs=1e-15)


def test_pinv_orthogonal_is_transpose(rng):
    q, _ = np.linalg.qr(rng.standard_normal((5, 5)))
    F = build_frame(q)
    z = rng.standard_normal(5)
    np.testing.assert_allclose(pinv_apply(F, z), q.T @ z, atol=1e-14)


def test_t_inner_examples():
    F = build_frame([[1.0], [2.0]])
    assert t_inner(F, [1.0], [1.0]) == pytest.approx(5.0)
    assert t_inner(F, [0.0], [3.0]) == 0.0
    q, _ = np.linalg.qr(np.random.default_rng(0).standard_normal((6, 3)))
    P = build_frame(q)
    x, y = np.array([1.0, 2.0, -1.0]), np.array([0.5, 0.0, 4.0])
    assert t_inner(P, x, y) == pytest.approx(x @ y, abs=1e-14)


def test_projector_examples():
    F = build_frame([[1.0], [2.0]])
    np.testing.assert_allclose(projector_apply(F, np.array([1.0, 0.0])), [0.2, 0.4], atol=1e-15)
    np.testing.assert_allclose(projector_apply(F, np.array([2.0, -1.0])), [0.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(projector_apply(F, np.array([3.0, 6.0])), [3.0, 6.0], atol=1e-14)


def test_length_errors():
    F = build_frame([[1.0], [2.0]])
    with pytest.raises(LengthError):
        pinv_apply(F, np.ones(3))
    with pytest.raises(LengthError):
        t_inner(F, np.ones(2), np.ones(1))
    with pytest.raises(LengthError):
        projector_apply(F, np.ones(1))


def test_rowsum_norm_matches_operator_definition(rng):
    # ||A||_inf = max over z in {-1, 1}^L of ||A z||_inf, brute force
    for _ in range(20):
        n = int(rng.integers(1, 4))
        l = int(rng.integers(n, 7))
        F = build_frame(rng.standard_normal((l, n)))
        T = F.entries
        proj = T @ np.linalg.solve(T.T @ T, T.T)
        best = max(np.max(np.abs(proj @ np.array(s)))
                   for s in itertools.product((-1.0, 1.0), repeat=l))
        assert F.rowsum_norm == pytest.approx(best, rel=1e-12)


def test_toy_rowsum_norm():
    assert build_frame([[1.0], [2.0]]).rowsum_norm == pytest.approx(6.0 / 5.0, abs=1e-15)


def test_random_frames_against_normal_equations(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 9))
        l = int(rng.integers(n, 3 * n + 1))
        F = build_frame(rng.standard_normal((l, n)))
        T = F.entries
        x = rng.standard_normal(n)
        tx2 = float(np.sum((T @ x) ** 2))
        assert abs(t_norm(F, x) ** 2 - tx2) <= 1e-10 * (1 + tx2)
        back = pinv_apply(F, T @ x)
        assert np.linalg.norm(back - x) <= 1e-9 * max(1.0, np.linalg.norm(x))
        z = rng.standard_normal(l)
        np.testing.assert_allclose(pinv_apply(F, z), np.linalg.solve(T.T @ T, T.T @ z),
                                   rtol=1e-7, atol=1e-9)
        pz = projector_apply(F, z)
        assert np.linalg.norm(projector_apply(F, pz) - pz) <= 1e-10 * (1 + np.linalg.norm(z))
        assert np.linalg.norm(pz) <= np.linalg.norm(z) + 1e-10
        assert F.sigma_min * np.linalg.norm(x) <= t_norm(F, x) * (1 + 1e-12)
        assert t_norm(F, x) <= F.spectral_norm * np.linalg.norm(x) * (1 + 1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 6), st.integers(0, 2 ** 31 - 1))
def test_frame_is_immutable_and_pinv_left_inverse(n, extra, seed):
    r = np.random.default_rng(seed)
    F = build_frame(r.standard_normal((n + extra, n)))
    with pytest.raises(ValueError):
        F.entries[0, 0] = 1.0
    x = r.standard_normal(n)
    np.testing.assert_allclose(pinv_apply(F, F.entries @ x), x, rtol=1e-8, atol=1e-8)

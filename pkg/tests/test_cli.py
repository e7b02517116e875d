import json
import shutil
import subprocess
import sys

import numpy as np
import pytest

from proxframe import cli
from proxframe.io import read_matrix, read_pgm, read_vector, write_matrix, write_pgm, write_vector


def run(*argv):
    return cli.main([str(a) for a in argv])


def test_shrink_gallery(tmp_path):
    write_vector(tmp_path / "z.txt", [1.0])
    assert run("shrink", "--gallery", "toy1d:c=2", "--gamma", 5 / 3,
               "--in", tmp_path / "z.txt", "--out", tmp_path / "o.txt") == 0
    assert read_vector(tmp_path / "o.txt")[0] == pytest.approx(2 / 15, abs=1e-12)


def test_shrink_frame_file_roundtrip_17_digits(tmp_path, rng):
    T = rng.standard_normal((5, 3))
    z = rng.standard_normal(3)
    write_matrix(tmp_path / "T.txt", T)
    write_vector(tmp_path / "z.txt", z)
    assert run("shrink", "--frame", tmp_path / "T.txt", "--gamma", 0.3,
               "--in", tmp_path / "z.txt", "--out", tmp_path / "o.txt") == 0
    from proxframe import build_frame, frame_soft_shrink
    expected = frame_soft_shrink(build_frame(T), 0.3, z)
    np.testing.assert_array_equal(read_vector(tmp_path / "o.txt"), expected)


@pytest.mark.parametrize("gamma", [-1.0, 0.0])
def test_invalid_gamma_exit_2(tmp_path, gamma):
    write_vector(tmp_path / "z.txt", [1.0])
    assert run("shrink", "--gallery", "toy1d", "--gamma", gamma,
               "--in", tmp_path / "z.txt", "--out", tmp_path / "o.txt") == 2


def test_rank_deficient_frame_exit_2(tmp_path):
    write_matrix(tmp_path / "T.txt", np.array([[1.0, 1.0], [2.0, 2.0]]))
    write_vector(tmp_path / "z.txt", [1.0, 0.0])
    assert run("shrink", "--frame", tmp_path / "T.txt", "--gamma", 1,
               "--in", tmp_path / "z.txt", "--out", tmp_path / "o.txt") == 2


def test_length_mismatch_exit_2(tmp_path):
    write_vector(tmp_path / "z.txt", [1.0, 2.0])
    assert run("shrink", "--gallery", "toy1d", "--gamma", 1,
               "--in", tmp_path / "z.txt", "--out", tmp_path / "o.txt") == 2


def test_missing_and_malformed_files_exit_3(tmp_path):
    assert run("shrink", "--gallery", "toy1d", "--gamma", 1,
               "--in", tmp_path / "nope.txt", "--out", tmp_path / "o.txt") == 3
    (tmp_path / "bad.txt").write_text("3 1\n1\n")
    assert run("shrink", "--frame", tmp_path / "bad.txt", "--gamma", 1,
               "--in", tmp_path / "bad.txt", "--out", tmp_path / "o.txt") == 3
    assert not (tmp_path / "o.txt").exists()


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        run("shrink", "--gamma", 1)
    assert info.value.code == 2


def test_prox_with_report(tmp_path):
    write_matrix(tmp_path / "T.txt", np.array([[1.0], [2.0]]))
    write_vector(tmp_path / "y.txt", [4.0])
    assert run("prox", "--matrix", tmp_path / "T.txt", "--gamma", 0.5, "--in", tmp_path / "y.txt",
               "--out", tmp_path / "x.txt", "--report", tmp_path / "r.json") == 0
    assert read_vector(tmp_path / "x.txt")[0] == pytest.approx(2.5, abs=1e-9)
    rep = json.loads((tmp_path / "r.json").read_text())
    assert rep["converged"] and rep["kkt_residual"] <= 1e-7


def test_prox_nonconvergence_exit_4(tmp_path, rng):
    write_matrix(tmp_path / "T.txt", rng.standard_normal((8, 4)))
    write_vector(tmp_path / "y.txt", rng.standard_normal(4))
    assert run("prox", "--matrix", tmp_path / "T.txt", "--gamma", 0.3, "--in", tmp_path / "y.txt",
               "--out", tmp_path / "x.txt", "--max-iters", 2) == 4
    assert read_vector(tmp_path / "x.txt").shape == (4,)


def test_tv_and_gallery(tmp_path):
    assert run("tv", "--n1", 2, "--n2", 3, "--out", tmp_path / "D.txt") == 0
    assert read_matrix(tmp_path / "D.txt").shape == (7, 6)
    assert run("tv", "--n1", 1, "--n2", 3, "--out", tmp_path / "D1.txt") == 2
    assert run("gallery", "--kind", "parseval:l=6,n=3,seed=1", "--out", tmp_path / "P.txt") == 0
    P = read_matrix(tmp_path / "P.txt")
    np.testing.assert_allclose(P.T @ P, np.eye(3), atol=1e-14)
    assert run("gallery", "--kind", "bogus", "--out", tmp_path / "B.txt") == 2


def test_verify_deterministic_json(tmp_path):
    args = ("verify", "--suite", "h_zero", "--seed", 3, "--samples", 50)
    assert run(*args, "--out", tmp_path / "a.json") == 0
    assert run(*args, "--out", tmp_path / "b.json") == 0
    a = (tmp_path / "a.json").read_text()
    assert a == (tmp_path / "b.json").read_text()
    reports = json.loads(a)
    assert all(r["passed"] for r in reports)
    assert {"name", "measured", "bound", "passed", "samples", "details"} <= set(reports[0])


def test_verify_with_fixed_frame(tmp_path):
    assert run("verify", "--suite", "firm_nonexpansive", "--samples", 30,
               "--gallery", "parseval:l=6,n=3", "--out", tmp_path / "v.json") == 0


def _solve_config(tmp_path, **overrides):
    cfg = {"f": "noisy.pgm", "lambda": 1.0,
           "backward": {"kind": "frame_shrink", "gamma": 0.1, "frame": "identity:n=16"}}
    cfg.update(overrides)
    (tmp_path / "cfg.json").write_text(json.dumps(cfg))
    return tmp_path / "cfg.json"


@pytest.fixture
def noisy_pgm(tmp_path):
    rng = np.random.default_rng(0)
    img = np.zeros((4, 4))
    img[:, 2:] = 0.8
    img = np.clip(img + 0.05 * rng.standard_normal(img.shape), 0, 1)
    write_pgm(tmp_path / "noisy.pgm", img, "P2")
    return read_pgm(tmp_path / "noisy.pgm")[0]


def test_solve_frame_shrink_pgm_one_step(tmp_path, noisy_pgm):
    from proxframe import build_frame, frame_soft_shrink
    cfg = _solve_config(tmp_path)
    assert run("solve", "--config", cfg, "--out", tmp_path / "out.pgm",
               "--trace", tmp_path / "t.json") == 0
    out, magic = read_pgm(tmp_path / "out.pgm")
    assert magic == "P2"
    f = noisy_pgm.reshape(-1, order="F")
    expected = frame_soft_shrink(build_frame(np.eye(16)), 0.1, f).reshape(4, 4, order="F")
    np.testing.assert_allclose(out, np.round(np.clip(expected, 0, 1) * 255) / 255)
    trace = json.loads((tmp_path / "t.json").read_text())
    assert trace["iterations"] == 2 and trace["converged"]


def test_solve_exact_tv_reduces_objective(tmp_path, noisy_pgm):
    cfg = _solve_config(tmp_path, backward={"kind": "exact_prox", "gamma": 0.05, "frame": "tv"})
    assert run("solve", "--config", cfg, "--out", tmp_path / "out.pgm",
               "--trace", tmp_path / "t.json") == 0
    trace = json.loads((tmp_path / "t.json").read_text())
    assert trace["objective_output"] <= trace["objective_input"]


def test_solve_tv_frame_shrink_rejected(tmp_path, noisy_pgm):
    cfg = _solve_config(tmp_path, backward={"kind": "frame_shrink", "gamma": 0.05, "frame": "tv"})
    assert run("solve", "--config", cfg, "--out", tmp_path / "out.pgm") == 2


def test_solve_bad_step_size(tmp_path, rng):
    K = rng.standard_normal((4, 4))
    write_matrix(tmp_path / "K.txt", K)
    write_vector(tmp_path / "f.txt", rng.standard_normal(4))
    lam = 3.0 / np.linalg.norm(K, 2) ** 2
    cfg = _solve_config(tmp_path, f="f.txt", K="K.txt", **{"lambda": lam})
    assert run("solve", "--config", cfg, "--out", tmp_path / "x.txt") == 2


def test_solve_config_errors(tmp_path):
    (tmp_path / "cfg.json").write_text("{not json")
    assert run("solve", "--config", tmp_path / "cfg.json", "--out", tmp_path / "x.txt") == 2
    (tmp_path / "cfg.json").write_text(json.dumps({"f": "f.txt"}))
    assert run("solve", "--config", tmp_path / "cfg.json", "--out", tmp_path / "x.txt") == 2
    assert run("solve", "--config", tmp_path / "missing.json", "--out", tmp_path / "x.txt") == 3


def test_console_script_installed(tmp_path):
    exe = shutil.which("proxframe")
    cmd = [exe] if exe else [sys.executable, "-m", "proxframe.cli"]
    out = subprocess.run(cmd + ["tv", "--n1", "2", "--n2", "2", "--out", str(tmp_path / "D.txt")],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert read_matrix(tmp_path / "D.txt").shape == (4, 4)

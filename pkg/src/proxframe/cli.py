"""Command-line entry point: ``proxframe <command> [options]``.

Exit codes: 0 success, 1 failed property check, 2 validation or config
error, 3 I/O error, 4 solver did not converge.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .errors import FormatError, NoConvergenceError, ProxFrameError
from .exact_prox import ProxSolverConfig, exact_prox
from .frame import build_frame
from .shrinkage import frame_soft_shrink
from .solver import (_GALLERY_ALIASES, BackwardStep, ForwardModel, fbs_solve,
                     gallery_from_spec, parse_gallery_spec, tv_matrix, tv_matrix_sparse)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_IO, EXIT_NOCONV = 0, 1, 2, 3, 4


class _IOFailure(Exception):
    pass


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _write_json(path, payload):
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True,
                                     default=_json_default) + "\n", encoding="utf-8")


def _require(*paths):
    for p in paths:
        if p is not None and not Path(p).exists():
            raise _IOFailure(f"no such file: {p}")


def _is_gallery_spec(text):
    return parse_gallery_spec(text)[0] in _GALLERY_ALIASES or text.startswith("tv:")


def _load_frame(args):
    if args.gallery:
        return gallery_from_spec(args.gallery)
    _require(args.frame)
    return build_frame(io.read_matrix(args.frame))


def cmd_shrink(args):
    if not (args.frame or args.gallery):
        raise ProxFrameError("one of --frame or --gallery is required")
    _require(args.frame, args.inp)
    F = _load_frame(args)
    z = io.read_vector(args.inp)
    io.write_vector(args.out, frame_soft_shrink(F, args.gamma, z))
    return EXIT_OK


def cmd_prox(args):
    _require(args.matrix, args.inp)
    T = io.read_matrix(args.matrix)
    y = io.read_vector(args.inp)
    try:
        res = exact_prox(T, args.gamma, y, ProxSolverConfig(max_iters=args.max_iters))
        code = EXIT_OK
    except NoConvergenceError as err:
        res, code = err.best, EXIT_NOCONV
    io.write_vector(args.out, res.minimizer)
    if args.report:
        _write_json(args.report, {
            "kkt_residual": res.kkt_residual,
            "iterations": res.iterations,
            "primal_obj": res.primal_obj,
            "duality_gap": res.duality_gap,
            "converged": res.converged,
        })
    return code


def cmd_tv(args):
    io.write_matrix(args.out, tv_matrix(args.n1, args.n2))
    return EXIT_OK


def cmd_gallery(args):
    io.write_matrix(args.out, gallery_from_spec(args.kind).entries)
    return EXIT_OK


def cmd_verify(args):
    frame = gallery_from_spec(args.gallery) if args.gallery else None
    reports = run_suite(args.suite, seed=args.seed, samples=args.samples, frame=frame)
    payload = [r.to_dict() for r in reports]
    if args.out:
        _write_json(args.out, payload)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True, default=_json_default))
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _resolve(base, value):
    p = Path(value)
    return p if p.is_absolute() else base / p


def _load_config(path):
    _require(path)
    try:
        cfg = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ProxFrameError(f"{path}: invalid JSON ({err.msg})") from None
    missing = [k for k in ("f", "backward", "lambda") if k not in cfg]
    if missing:
        raise ProxFrameError(f"config is missing {', '.join(missing)}")
    return cfg


def _analysis_operator(spec, base, image_shape):
    """Resolve ``backward.frame``: gallery spec, ``tv`` or a matrix path."""
    if spec == "tv" or spec.startswith("tv:"):
        if spec == "tv":
            if image_shape is None:
                raise ProxFrameError("frame 'tv' needs an image input; use tv:n1=..,n2=..")
            n1, n2 = image_shape
        else:
            params = parse_gallery_spec(spec)[1]
            n1, n2 = params["n1"], params["n2"]
        return tv_matrix_sparse(n1, n2)
    if _is_gallery_spec(spec):
        return gallery_from_spec(spec)
    path = _resolve(base, spec)
    _require(path)
    return io.read_matrix(path)


def cmd_solve(args):
    cfg = _load_config(args.config)
    base = Path(args.config).resolve().parent
    f_path = _resolve(base, cfg["f"])
    _require(f_path)
    K_spec = cfg.get("K", "identity")
    if K_spec != "identity":
        _require(_resolve(base, K_spec))

    image_magic = image_shape = None
    if f_path.suffix.lower() == ".pgm":
        image, image_magic = io.read_pgm(f_path)
        image_shape = image.shape
        f = io.image_to_vector(image)
    else:
        f = io.read_vector(f_path)
    model = (ForwardModel.denoising(f) if K_spec == "identity"
             else ForwardModel(io.read_matrix(_resolve(base, K_spec)), f))

    bw = cfg["backward"]
    lam = float(cfg["lambda"])
    kind = bw.get("kind", "frame_shrink")
    if "gamma" not in bw and "threshold" not in bw:
        raise ProxFrameError("backward needs gamma or threshold")
    threshold = float(bw["threshold"]) if "threshold" in bw else lam * float(bw["gamma"])
    op = _analysis_operator(str(bw.get("frame", "tv")), base, image_shape)
    if kind == "frame_shrink":
        backward = BackwardStep.frame_shrink(op, threshold)
    elif kind == "exact_prox":
        backward = BackwardStep.exact(op, threshold)
    else:
        raise ProxFrameError(f"unknown backward kind {kind!r}")

    code = EXIT_OK
    try:
        x, trace = fbs_solve(model, lam, backward, tol=float(cfg.get("tol", 1e-10)),
                             max_iters=int(cfg.get("max_iters", 10_000)))
    except NoConvergenceError as err:
        x, trace, code = err.best, err.trace, EXIT_NOCONV

    if image_magic is not None:
        io.write_pgm(args.out, io.vector_to_image(x, image_shape), image_magic)
    else:
        io.write_vector(args.out, x)
    if args.trace:
        payload = trace.to_dict()
        payload["backward"] = backward.description
        payload["lambda"] = lam
        if kind == "exact_prox":
            weight = threshold / lam
            T = backward.analysis_matrix()
            payload["objective_input"] = model.data_fit(f) + weight * float(np.abs(T @ f).sum())
            payload["objective_output"] = model.data_fit(x) + weight * float(np.abs(T @ x).sum())
        _write_json(args.trace, payload)
    return code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="proxframe",
        description="Frame soft shrinkage, exact analysis-l1 prox and forward-backward splitting.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shrink", help="apply T^+ S_gamma T to a vector")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--frame", help="matrix file")
    src.add_argument("--gallery", help="gallery spec, e.g. toy1d:c=2")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_shrink)

    p = sub.add_parser("prox", help="exact prox of gamma ||T.||_1")
    p.add_argument("--matrix", required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--report")
    p.add_argument("--max-iters", type=int, default=200_000)
    p.set_defaults(func=cmd_prox)

    p = sub.add_parser("solve", help="forward-backward splitting from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--trace")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int)
    p.add_argument("--gallery", help="fix the frame used by the suites")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tv", help="write the anisotropic TV matrix")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tv)

    p = sub.add_parser("gallery", help="write a gallery frame")
    p.add_argument("--kind", required=True, help="e.g. identity:n=4, parseval:l=6,n=3")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gallery)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_IOFailure, FormatError, OSError) as err:
        print(f"proxframe: I/O error: {err}", file=sys.stderr)
        return EXIT_IO
    except NoConvergenceError as err:
        print(f"proxframe: {err}", file=sys.stderr)
        return EXIT_NOCONV
    except (ProxFrameError, ValueError, KeyError, TypeError) as err:
        print(f"proxframe: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

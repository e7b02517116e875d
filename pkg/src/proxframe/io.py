"""Plain-text matrix/vector files and 8-bit PGM images.

Matrix files start with a line ``"L N"`` followed by ``L`` rows of ``N``
whitespace-separated reals; vector files hold one real per line. Numbers are
written with 17 significant digits so doubles survive a round trip.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import FormatError

_FMT = "%.17g"


def read_matrix(path) -> np.ndarray:
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError(f"{path}: empty matrix file")
    try:
        L, N = (int(v) for v in lines[0].split())
    except ValueError:
        raise FormatError(f"{path}: first line must be 'L N'") from None
    if len(lines) - 1 != L:
        raise FormatError(f"{path}: expected {L} rows, found {len(lines) - 1}")
    try:
        M = np.array([[float(v) for v in ln.split()] for ln in lines[1:]], dtype=float)
    except ValueError as err:
        raise FormatError(f"{path}: {err}") from None
    if M.shape != (L, N):
        raise FormatError(f"{path}: rows do not all have {N} entries")
    return M


def write_matrix(path, M) -> None:
    M = np.atleast_2d(np.asarray(M, dtype=float))
    rows = [" ".join(_FMT % v for v in row) for row in M]
    Path(path).write_text(f"{M.shape[0]} {M.shape[1]}\n" + "\n".join(rows) + "\n",
                          encoding="utf-8")


def read_vector(path) -> np.ndarray:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return np.array([float(ln) for ln in text.split()], dtype=float)
    except ValueError as err:
        raise FormatError(f"{path}: {err}") from None


def write_vector(path, v) -> None:
    v = np.asarray(v, dtype=float).ravel()
    Path(path).write_text("".join(_FMT % x + "\n" for x in v), encoding="utf-8")


def _pgm_tokens(data: bytes):
    """Yield header tokens and the offset just past the last one."""
    pos = 0
    tokens = []
    while len(tokens) < 4:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise FormatError("truncated PGM header")
        tokens.append(data[start:pos])
    return tokens, pos


def read_pgm(path):
    """Load a P2 or P5 PGM (maxval 255) as floats in [0, 1].

    Returns ``(image, magic)`` where ``image`` has shape ``(rows, cols)``.
    """
    data = Path(path).read_bytes()
    tokens, pos = _pgm_tokens(data)
    magic = tokens[0].decode("ascii", "replace")
    if magic not in ("P2", "P5"):
        raise FormatError(f"{path}: unsupported PGM magic {magic!r}")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise FormatError(f"{path}: bad PGM header") from None
    if maxval != 255:
        raise FormatError(f"{path}: only maxval 255 is supported, got {maxval}")
    count = width * height
    if magic == "P5":
        raw = data[pos + 1: pos + 1 + count]
        if len(raw) != count:
            raise FormatError(f"{path}: expected {count} bytes of pixel data")
        pix = np.frombuffer(raw, dtype=np.uint8)
    else:
        try:
            pix = np.array([int(t) for t in data[pos:].split()], dtype=np.int64)
        except ValueError:
            raise FormatError(f"{path}: non-integer pixel in P2 body") from None
        if pix.size != count or pix.min(initial=0) < 0 or pix.max(initial=0) > 255:
            raise FormatError(f"{path}: expected {count} pixels in 0..255")
    return pix.reshape(height, width).astype(float) / 255.0, magic


def write_pgm(path, image, magic="P5") -> None:
    """Clip ``image`` to [0, 1], quantize to 0..255 and write it as PGM."""
    img = np.asarray(image, dtype=float)
    pix = np.rint(np.clip(img, 0.0, 1.0) * 255.0).astype(np.uint8)
    h, w = pix.shape
    header = f"{magic}\n{w} {h}\n255\n".encode("ascii")
    if magic == "P5":
        Path(path).write_bytes(header + pix.tobytes())
    elif magic == "P2":
        body = "\n".join(" ".join(str(int(v)) for v in row) for row in pix) + "\n"
        Path(path).write_bytes(header + body.encode("ascii"))
    else:
        raise ValueError(f"unsupported PGM magic {magic!r}")


def image_to_vector(image) -> np.ndarray:
    """Column-major vectorization, ``x[j + n1 * k] = X[j, k]``."""
    return np.asarray(image, dtype=float).ravel(order="F")


def vector_to_image(x, shape) -> np.ndarray:
    return np.asarray(x, dtype=float).reshape(shape, order="F")

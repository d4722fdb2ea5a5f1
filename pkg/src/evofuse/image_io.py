"""8-bit grayscale image files: binary PGM (P5) and PNG.

Pixels are kept as doubles in [0, 1] in memory and quantized to 8 bits only
on save.  Color PNG input is reduced to luma with the 0.299/0.587/0.114
weighting.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from .exceptions import ShapeError
from .validation import check_image

LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])


def load_image(path) -> np.ndarray:
    """Load a PGM or PNG file as a float image in [0, 1]."""
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        arr = _read_pgm(path)
    else:
        arr = _read_with_pillow(path)
    return check_image(arr, str(path))


def save_image(img, path) -> None:
    """Quantize to 8 bits and write PGM or PNG depending on the suffix."""
    arr = check_image(img, "image")
    data = np.round(arr * 255.0).astype(np.uint8)
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        _write_pgm(data, path)
    else:
        PILImage.fromarray(data, mode="L").save(path, format="PNG")


def _read_pgm(path: Path) -> np.ndarray:
    raw = path.read_bytes()
    # header: magic, width, height, maxval, separated by whitespace/comments
    tokens = []
    pos = 0
    while len(tokens) < 4:
        m = re.compile(rb"\s*(#[^\n]*\n|\S+)").match(raw, pos)
        if m is None:
            raise ShapeError(f"{path}: truncated PGM header")
        pos = m.end()
        tok = m.group(1)
        if not tok.startswith(b"#"):
            tokens.append(tok)
    if tokens[0] != b"P5":
        raise ShapeError(f"{path}: expected binary PGM (P5), got {tokens[0]!r}")
    width, height, maxval = (int(t) for t in tokens[1:])
    if maxval != 255:
        raise ShapeError(f"{path}: only 8-bit PGM supported, maxval={maxval}")
    pos += 1  # single whitespace byte between maxval and the pixel payload
    pixels = np.frombuffer(raw, dtype=np.uint8, count=width * height, offset=pos)
    if pixels.size != width * height:
        raise ShapeError(f"{path}: pixel payload shorter than {width}x{height}")
    return pixels.reshape(height, width).astype(np.float64) / 255.0


def _write_pgm(data: np.ndarray, path: Path) -> None:
    h, w = data.shape
    header = f"P5\n{w} {h}\n255\n".encode("ascii")
    path.write_bytes(header + data.tobytes())


def _read_with_pillow(path: Path) -> np.ndarray:
    with PILImage.open(path) as im:
        if im.mode == "L":
            arr = np.asarray(im, dtype=np.float64)
        else:
            rgb = np.asarray(im.convert("RGB"), dtype=np.float64)
            arr = rgb @ LUMA_WEIGHTS
    return arr / 255.0

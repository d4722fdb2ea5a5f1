"""Dense 2-D kernels shared by every other module.

Conventions fixed here and relied on everywhere else:

* filtering is cross-correlation (kernels are not flipped),
* borders are handled by replicate padding,
* resizing is bilinear with corner-aligned sample coordinates, so resizing
  to the same size is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import correlate2d

from .exceptions import ParameterError, ShapeError
from .validation import as_float_array, check_odd, check_positive

SOBEL_X = np.array([[-1.0, 0.0, 1.0], [-2.0, 0.0, 2.0], [-1.0, 0.0, 1.0]])
SOBEL_Y = np.array([[-1.0, -2.0, -1.0], [0.0, 0.0, 0.0], [1.0, 2.0, 1.0]])


@dataclass(frozen=True)
class GradientField:
    """Per-pixel Sobel responses and their joint magnitude."""

    dx: np.ndarray
    dy: np.ndarray
    magnitude: np.ndarray


def correlate_replicate(arr: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Same-size cross-correlation with edge-replicated borders."""
    arr = np.asarray(arr, dtype=np.float64)
    kernel = np.asarray(kernel, dtype=np.float64)
    if arr.ndim != 2 or kernel.ndim != 2:
        raise ShapeError("correlate_replicate expects 2-D inputs")
    rh, rw = kernel.shape[0] // 2, kernel.shape[1] // 2
    padded = np.pad(arr, ((rh, rh), (rw, rw)), mode="edge")
    return correlate2d(padded, kernel, mode="valid")


def correlate_replicate_adjoint(grad: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Adjoint of :func:`correlate_replicate` for gradient backpropagation.

    Satisfies <correlate_replicate(x, k), g> == <x, adjoint(g, k)> for all x, g.
    """
    grad = np.asarray(grad, dtype=np.float64)
    kernel = np.asarray(kernel, dtype=np.float64)
    rh, rw = kernel.shape[0] // 2, kernel.shape[1] // 2
    # adjoint of the valid correlation is a full convolution with the kernel
    from scipy.signal import convolve2d

    padded_grad = convolve2d(grad, kernel, mode="full")
    return _fold_replicate(padded_grad, rh, rw)


def _fold_replicate(padded: np.ndarray, rh: int, rw: int) -> np.ndarray:
    """Adjoint of edge-replication: fold pad contributions back onto the border."""
    core = padded[rh : padded.shape[0] - rh, rw : padded.shape[1] - rw].copy()
    if rh:
        core[0, :] += padded[:rh, rw : padded.shape[1] - rw].sum(axis=0)
        core[-1, :] += padded[padded.shape[0] - rh :, rw : padded.shape[1] - rw].sum(axis=0)
    if rw:
        core[:, 0] += padded[rh : padded.shape[0] - rh, :rw].sum(axis=1)
        core[:, -1] += padded[rh : padded.shape[0] - rh, padded.shape[1] - rw :].sum(axis=1)
    if rh and rw:
        core[0, 0] += padded[:rh, :rw].sum()
        core[0, -1] += padded[:rh, padded.shape[1] - rw :].sum()
        core[-1, 0] += padded[padded.shape[0] - rh :, :rw].sum()
        core[-1, -1] += padded[padded.shape[0] - rh :, padded.shape[1] - rw :].sum()
    return core


def sobel_gradient(img) -> GradientField:
    """3x3 Sobel responses with replicate borders, plus the L2 magnitude."""
    arr = as_float_array(img, "image")
    if arr.ndim != 2:
        raise ShapeError(f"sobel_gradient expects a 2-D image, got {arr.ndim}-D")
    if min(arr.shape) < 3:
        raise ShapeError(f"image too small for a 3x3 kernel: {arr.shape}")
    dx = correlate_replicate(arr, SOBEL_X)
    dy = correlate_replicate(arr, SOBEL_Y)
    return GradientField(dx=dx, dy=dy, magnitude=np.hypot(dx, dy))


def gaussian_window(size: int, sigma: float) -> np.ndarray:
    """Normalized isotropic Gaussian window; sums to one."""
    size = check_odd(size, "window size")
    sigma = check_positive(sigma, "sigma")
    half = size // 2
    coords = np.arange(-half, half + 1, dtype=np.float64)
    g1 = np.exp(-(coords**2) / (2.0 * sigma * sigma))
    win = np.outer(g1, g1)
    return win / win.sum()


def _resize_axis(n_in: int, n_out: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Corner-aligned source indices and blend weights for one axis."""
    if n_out < 1:
        raise ParameterError(f"output size must be >= 1, got {n_out}")
    if n_out == 1:
        pos = np.array([(n_in - 1) / 2.0])
    else:
        pos = np.arange(n_out, dtype=np.float64) * (n_in - 1) / (n_out - 1)
    lo = np.floor(pos).astype(np.intp)
    lo = np.clip(lo, 0, max(n_in - 2, 0))
    frac = pos - lo
    if n_in == 1:
        lo = np.zeros(n_out, dtype=np.intp)
        frac = np.zeros(n_out)
    return lo, np.minimum(lo + 1, n_in - 1), frac


def bilinear_resize(src, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resize of a 2-D map or a (channels, H, W) block.

    Corner-aligned: resizing to the input size reproduces it exactly, and the
    operation commutes with horizontal/vertical flips.
    """
    arr = as_float_array(src, "resize input")
    if arr.ndim == 3:
        return np.stack([bilinear_resize(c, out_h, out_w) for c in arr])
    if arr.ndim != 2:
        raise ShapeError(f"bilinear_resize expects 2-D or 3-D input, got {arr.ndim}-D")
    r0, r1, rf = _resize_axis(arr.shape[0], out_h)
    c0, c1, cf = _resize_axis(arr.shape[1], out_w)
    rf = rf[:, None]
    cf = cf[None, :]
    top = arr[np.ix_(r0, c0)] * (1 - cf) + arr[np.ix_(r0, c1)] * cf
    bot = arr[np.ix_(r1, c0)] * (1 - cf) + arr[np.ix_(r1, c1)] * cf
    return top * (1 - rf) + bot * rf


def bilinear_resize_adjoint(grad: np.ndarray, in_h: int, in_w: int) -> np.ndarray:
    """Adjoint of :func:`bilinear_resize` from output-space gradients to input space."""
    grad = np.asarray(grad, dtype=np.float64)
    out_h, out_w = grad.shape
    r0, r1, rf = _resize_axis(in_h, out_h)
    c0, c1, cf = _resize_axis(in_w, out_w)
    out = np.zeros((in_h, in_w))
    wr = np.stack([1 - rf, rf])  # (2, out_h)
    wc = np.stack([1 - cf, cf])  # (2, out_w)
    rows = np.stack([r0, r1])
    cols = np.stack([c0, c1])
    for a in range(2):
        for b in range(2):
            contrib = grad * wr[a][:, None] * wc[b][None, :]
            np.add.at(out, (rows[a][:, None], cols[b][None, :]), contrib)
    return out


def joint_histogram(a, b, bins: int) -> np.ndarray:
    """Joint intensity counts of two equally shaped images in [0, 1].

    Bin index is floor(v * bins) with v == 1.0 clamped into the last bin, so
    the grid always sums to the pixel count.
    """
    a = as_float_array(a, "first image")
    b = as_float_array(b, "second image")
    if a.shape != b.shape:
        raise ShapeError(f"images must share dimensions, got {a.shape} vs {b.shape}")
    if bins < 2:
        raise ParameterError(f"bins must be >= 2, got {bins}")
    ia = np.minimum((a * bins).astype(np.intp), bins - 1).ravel()
    ib = np.minimum((b * bins).astype(np.intp), bins - 1).ravel()
    hist = np.zeros((bins, bins), dtype=np.int64)
    np.add.at(hist, (ia, ib), 1)
    return hist

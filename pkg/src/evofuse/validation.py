"""Input validation helpers.

Images are plain 2-D float arrays with values in [0, 1]; feature maps are
3-D (channels, height, width) float arrays.  Every public operation funnels
its inputs through these checks so shape and range errors surface at the
boundary with a usable message.
"""

from __future__ import annotations

import numpy as np

from .exceptions import ParameterError, ShapeError

MIN_IMAGE_SIDE = 8


def as_float_array(x, name: str = "array") -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.size == 0:
        raise ShapeError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise ShapeError(f"{name} contains non-finite values")
    return arr


def check_image(x, name: str = "image") -> np.ndarray:
    """Validate a 2-D intensity grid in [0, 1] with sides >= 8."""
    arr = as_float_array(x, name)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got {arr.ndim}-D")
    h, w = arr.shape
    if h < MIN_IMAGE_SIDE or w < MIN_IMAGE_SIDE:
        raise ShapeError(f"{name} must be at least {MIN_IMAGE_SIDE}x{MIN_IMAGE_SIDE}, got {h}x{w}")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise ShapeError(f"{name} values must lie in [0, 1], got range [{arr.min()}, {arr.max()}]")
    return arr


def clamp_image(x) -> np.ndarray:
    """Clamp an arbitrary finite 2-D array into a valid image."""
    arr = as_float_array(x, "image")
    if arr.ndim != 2:
        raise ShapeError(f"image must be 2-D, got {arr.ndim}-D")
    return np.clip(arr, 0.0, 1.0)


def check_feature_map(x, name: str = "feature map") -> np.ndarray:
    """Validate a (channels, height, width) block; a 2-D array is promoted to one channel."""
    arr = as_float_array(x, name)
    if arr.ndim == 2:
        arr = arr[np.newaxis, :, :]
    if arr.ndim != 3:
        raise ShapeError(f"{name} must be 2-D or 3-D, got {arr.ndim}-D")
    if arr.shape[0] < 1:
        raise ShapeError(f"{name} needs at least one channel")
    return arr


def check_same_shape(*named_arrays: tuple[str, np.ndarray]) -> None:
    ref_name, ref = named_arrays[0]
    for name, arr in named_arrays[1:]:
        if arr.shape != ref.shape:
            raise ShapeError(
                f"{name} shape {arr.shape} does not match {ref_name} shape {ref.shape}"
            )


def check_positive(value: float, name: str) -> float:
    if not np.isfinite(value) or value <= 0:
        raise ParameterError(f"{name} must be positive and finite, got {value}")
    return float(value)


def check_odd(value: int, name: str) -> int:
    if value < 1 or value % 2 == 0:
        raise ParameterError(f"{name} must be a positive odd integer, got {value}")
    return int(value)

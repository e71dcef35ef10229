# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Separable linear resampling and filtering of feature maps.

Every resampler is expressed as a pair of interpolation matrices applied along the height
and the width axes, ``y = A_h · x · A_wᵀ``, so that one differentiable operation serves the
bilinear and bicubic resizers and the Gaussian window of the SSIM.
"""

# Standard library
import math
from fractions import Fraction
from functools import lru_cache

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.tensor import Function, Tensor

BICUBIC_A = -0.5

DOWNSCALE_FACTORS = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))
UPSCALE_FACTORS = (Fraction(2),)


class Separable(Function):
    def forward(self, x: np.ndarray, a_h: np.ndarray, a_w: np.ndarray) -> np.ndarray:
        self.a_h, self.a_w = a_h.astype(x.dtype), a_w.astype(x.dtype)
        return self.a_h @ x @ self.a_w.T

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return (self.a_h.T @ grad @ self.a_w,)


def separable(x: Tensor, a_h: np.ndarray, a_w: np.ndarray) -> Tensor:
    r"""Apply the matrices `a_h` [H', H] and `a_w` [W', W] to the spatial axes of `x`.

    Raises
    ------
    ianrelight.ShapeError
        If the matrices do not match the spatial extents of `x`.
    """

    if x.ndim != 4 or a_h.shape[1] != x.shape[2] or a_w.shape[1] != x.shape[3]:  # noqa: PLR2004
        raise exceptions.ShapeError(
            f'Cannot resample a tensor of shape {x.shape} with matrices '
            f'{a_h.shape} and {a_w.shape}!'
        )

    return Separable.apply(x, a_h=a_h, a_w=a_w)


# ==================================================================================================
# Interpolation matrices
# ==================================================================================================


def cubic_kernel(t: np.ndarray, a: float = BICUBIC_A) -> np.ndarray:
    r"""The Keys cubic convolution kernel, Catmull-Rom for a = -0.5."""

    t = np.abs(t)
    t2, t3 = t * t, t * t * t
    near = (a + 2) * t3 - (a + 3) * t2 + 1
    far = a * t3 - 5 * a * t2 + 8 * a * t - 4 * a
    return np.where(t <= 1, near, np.where(t < 2, far, 0.0))  # noqa: PLR2004


@lru_cache(maxsize=128)
def bilinear_matrix(size: int) -> np.ndarray:
    r"""The [2·size, size] matrix of a 2x bilinear upsampling with pixel-center alignment.

    Output pixel i samples input coordinate (i + 0.5) / 2 - 0.5, clamped to the image.
    """

    matrix = np.zeros((2 * size, size))
    for i in range(2 * size):
        src = min(max((i + 0.5) / 2 - 0.5, 0.0), size - 1.0)
        i0 = math.floor(src)
        i1 = min(i0 + 1, size - 1)
        t = src - i0
        matrix[i, i0] += 1 - t
        matrix[i, i1] += t

    matrix.flags.writeable = False
    return matrix


@lru_cache(maxsize=128)
def bicubic_matrix(size_in: int, size_out: int) -> np.ndarray:
    r"""The [size_out, size_in] matrix of a bicubic resize, antialiased when downscaling.

    Samples are aligned at the pixel centers and their coordinates are clamped to the image,
    which replicates the border pixels. When downscaling the kernel is stretched by the
    inverse scale to prefilter the image and the weights of every row are normalized to
    sum to one.
    """

    scale = size_out / size_in
    support = 2.0 if scale >= 1 else 2.0 / scale
    kernel_scale = min(scale, 1.0)

    matrix = np.zeros((size_out, size_in))
    for i in range(size_out):
        src = (i + 0.5) / scale - 0.5
        taps = np.arange(math.floor(src - support) + 1, math.floor(src + support) + 1)
        weights = cubic_kernel((src - taps) * kernel_scale)
        np.add.at(matrix[i], np.clip(taps, 0, size_in - 1), weights)
        matrix[i] /= matrix[i].sum()

    matrix.flags.writeable = False
    return matrix


@lru_cache(maxsize=32)
def gaussian_window_matrix(size: int, window: int = 11, sigma: float = 1.5) -> np.ndarray:
    r"""The [size - window + 1, size] matrix of a normalized 1D Gaussian filter without padding."""

    offsets = np.arange(window) - (window - 1) / 2
    kernel = np.exp(-(offsets**2) / (2 * sigma**2))
    kernel /= kernel.sum()

    matrix = np.zeros((size - window + 1, size))
    for i in range(size - window + 1):
        matrix[i, i : i + window] = kernel

    matrix.flags.writeable = False
    return matrix


# ==================================================================================================
# Resizers
# ==================================================================================================


def upsample_bilinear2x(x: Tensor) -> Tensor:
    r"""Upsample feature maps [N, C, H, W] to [N, C, 2H, 2W] with bilinear interpolation."""

    if x.ndim != 4:  # noqa: PLR2004
        raise exceptions.ShapeError(f'upsample_bilinear2x expects [N, C, H, W], got {x.shape}!')

    return separable(x, bilinear_matrix(x.shape[2]), bilinear_matrix(x.shape[3]))


def resize_bicubic(x: Tensor, factor: float | Fraction) -> Tensor:
    r"""Resize feature maps [N, C, H, W] with bicubic interpolation (a = -0.5).

    Downscaling stretches the cubic kernel by the inverse factor, prefiltering the maps
    against aliasing, see :func:`bicubic_matrix`.

    Parameters
    ----------
    x : ianrelight.tensor.Tensor
        The feature maps to resize.

    factor : float or fractions.Fraction
        The scale factor: 2 for upsampling, 1/2, 1/4 or 1/8 for downsampling.

    Returns
    -------
    ianrelight.tensor.Tensor
        The resized feature maps.

    Raises
    ------
    ianrelight.ShapeError
        If `factor` is not supported or the extents are not divisible by the downscale ratio.
    """

    _factor = Fraction(factor).limit_denominator(64)
    if _factor not in DOWNSCALE_FACTORS + UPSCALE_FACTORS:
        raise exceptions.ShapeError(
            f'Unsupported resize factor {factor}! '
            f'Supported: {tuple(str(f) for f in DOWNSCALE_FACTORS + UPSCALE_FACTORS)}'
        )
    if x.ndim != 4:  # noqa: PLR2004
        raise exceptions.ShapeError(f'resize_bicubic expects [N, C, H, W], got {x.shape}!')

    h, w = x.shape[2:]
    if _factor < 1 and (h % _factor.denominator or w % _factor.denominator):
        raise exceptions.ShapeError(
            f'Spatial size {h}x{w} is not divisible by {_factor.denominator} '
            f'for a downscale by {_factor}!'
        )

    ho, wo = int(h * _factor), int(w * _factor)
    return separable(x, bicubic_matrix(h, ho), bicubic_matrix(w, wo))

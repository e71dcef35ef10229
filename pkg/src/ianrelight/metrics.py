# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Image quality metrics of relit images.

The metrics take arrays of shape [3, H, W] or [N, 3, H, W] and clamp them to [0, 1].
"""

# Standard library
import math

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.losses import ssim, to_grayscale
from ianrelight.tensor import Tensor, no_grad, precision


def _prepare(out: np.ndarray, gt: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if out.shape != gt.shape:
        raise exceptions.ShapeError(f'Metric inputs differ in shape: {out.shape} != {gt.shape}!')

    a = np.clip(np.asarray(out, dtype=np.float64), 0.0, 1.0)
    b = np.clip(np.asarray(gt, dtype=np.float64), 0.0, 1.0)
    if a.ndim == 3:  # noqa: PLR2004
        a, b = a[None], b[None]

    return a, b


def psnr(out: np.ndarray, gt: np.ndarray) -> float:
    r"""The peak signal-to-noise ratio in dB with a peak of 1.

    The mean squared error is taken over all RGB elements. Identical images have PSNR +inf.

    Raises
    ------
    ianrelight.ShapeError
        If the shapes differ.
    """

    a, b = _prepare(out, gt)
    mse = float(np.mean((a - b) ** 2))

    return math.inf if mse == 0 else 10.0 * math.log10(1.0 / mse)


def ssim_rgb(out: np.ndarray, gt: np.ndarray) -> float:
    r"""The SSIM averaged over the RGB channels."""

    a, b = _prepare(out, gt)
    with precision(np.float64), no_grad():
        return ssim(Tensor(a), Tensor(b)).item()


def ssim_luma(out: np.ndarray, gt: np.ndarray) -> float:
    r"""The SSIM of the BT.601 luma."""

    a, b = _prepare(out, gt)
    with precision(np.float64), no_grad():
        return ssim(to_grayscale(Tensor(a)), to_grayscale(Tensor(b))).item()

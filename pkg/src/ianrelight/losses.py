# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The training losses.

All losses take tensors of shape [N, C, H, W] and return a single element tensor.
"""

# Standard library
import logging
from collections.abc import Sequence
from fractions import Fraction

# Local
from ianrelight import exceptions
from ianrelight.config import LossWeights
from ianrelight.nn import gaussian_window_matrix, resize_bicubic, separable
from ianrelight.tensor import Tensor, no_grad

logger = logging.getLogger(__name__)

LUMA_WEIGHTS = (0.299, 0.587, 0.114)
SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_C1 = 0.01**2
SSIM_C2 = 0.03**2
MIN_GRADIENT_SIZE = 3


def _check_same_shape(a: Tensor, b: Tensor, name: str) -> None:
    if a.shape != b.shape:
        raise exceptions.ShapeError(f'{name}: shape mismatch {a.shape} != {b.shape}!')


def l1_loss(a: Tensor, b: Tensor) -> Tensor:
    r"""The mean absolute difference over all elements."""

    _check_same_shape(a, b, 'l1_loss')
    return (a - b).abs().mean()


def to_grayscale(img: Tensor) -> Tensor:
    r"""Convert RGB images [N, 3, H, W] to their BT.601 luma [N, 1, H, W].

    Raises
    ------
    ianrelight.ShapeError
        If `img` does not have three channels.
    """

    if img.ndim != 4 or img.shape[1] != 3:  # noqa: PLR2004
        raise exceptions.ShapeError(f'to_grayscale expects [N, 3, H, W], got {img.shape}!')

    r, g, b = LUMA_WEIGHTS
    return img[:, 0:1] * r + img[:, 1:2] * g + img[:, 2:3] * b


def _gaussian_filter(x: Tensor) -> Tensor:
    h, w = x.shape[2:]
    return separable(
        x,
        gaussian_window_matrix(h, SSIM_WINDOW, SSIM_SIGMA),
        gaussian_window_matrix(w, SSIM_WINDOW, SSIM_SIGMA),
    )


def ssim(a: Tensor, b: Tensor) -> Tensor:
    r"""The structural similarity of two images with a dynamic range of 1.

    The local statistics are computed with an 11x11 Gaussian window of standard deviation 1.5
    at every position where the window fits inside the image, and the SSIM map is averaged
    over these positions, the channels and the batch.

    Parameters
    ----------
    a, b : ianrelight.tensor.Tensor
        The images of shape [N, C, H, W], typically single-channel.

    Returns
    -------
    ianrelight.tensor.Tensor
        The mean SSIM in [-1, 1].

    Raises
    ------
    ianrelight.ShapeError
        If the shapes differ or the images are smaller than the window.
    """

    _check_same_shape(a, b, 'ssim')
    if a.ndim != 4 or min(a.shape[2:]) < SSIM_WINDOW:  # noqa: PLR2004
        raise exceptions.ShapeError(
            f'ssim requires images [N, C, H, W] of at least {SSIM_WINDOW}x{SSIM_WINDOW}, '
            f'got {a.shape}!'
        )

    mu_a, mu_b = _gaussian_filter(a), _gaussian_filter(b)
    mu_aa, mu_bb, mu_ab = mu_a * mu_a, mu_b * mu_b, mu_a * mu_b

    var_a = _gaussian_filter(a * a) - mu_aa
    var_b = _gaussian_filter(b * b) - mu_bb
    cov = _gaussian_filter(a * b) - mu_ab

    numerator = (mu_ab * 2.0 + SSIM_C1) * (cov * 2.0 + SSIM_C2)
    denominator = (mu_aa + mu_bb + SSIM_C1) * (var_a + var_b + SSIM_C2)

    return (numerator / denominator).mean()


def ssim_gray_loss(out: Tensor, gt: Tensor) -> Tensor:
    r"""One minus the SSIM of the grayscale versions of two RGB images."""

    _check_same_shape(out, gt, 'ssim_gray_loss')
    return 1.0 - ssim(to_grayscale(out), to_grayscale(gt))


def _central_differences(img: Tensor) -> tuple[Tensor, Tensor]:
    dx = img[:, :, 1:-1, 2:] - img[:, :, 1:-1, :-2]
    dy = img[:, :, 2:, 1:-1] - img[:, :, :-2, 1:-1]
    return dx, dy


def gradient_loss(out: Tensor, gt: Tensor) -> Tensor:
    r"""The squared difference of the image gradients averaged over the interior pixels.

    The gradients are the central differences ``I(x+1, y) - I(x-1, y)`` and
    ``I(x, y+1) - I(x, y-1)`` of every channel. The one pixel border, where they are
    undefined, is excluded.

    Raises
    ------
    ianrelight.ShapeError
        If the shapes differ or the images are smaller than 3x3.
    """

    _check_same_shape(out, gt, 'gradient_loss')
    if out.ndim != 4 or min(out.shape[2:]) < MIN_GRADIENT_SIZE:  # noqa: PLR2004
        raise exceptions.ShapeError(
            f'gradient_loss requires images [N, C, H, W] of at least 3x3, got {out.shape}!'
        )

    dx_out, dy_out = _central_differences(out)
    dx_gt, dy_gt = _central_differences(gt)
    ex, ey = dx_out - dx_gt, dy_out - dy_gt

    return (ex * ex).mean() + (ey * ey).mean()


def level_loss(out: Tensor, gt: Tensor, weights: LossWeights) -> Tensor:
    r"""The weighted sum of the L1, grayscale SSIM and gradient losses of one level.

    Losses with a zero weight are not computed.
    """

    loss = l1_loss(out, gt) * weights.alpha
    if weights.beta:
        loss = loss + ssim_gray_loss(out, gt) * weights.beta
    if weights.gamma:
        loss = loss + gradient_loss(out, gt) * weights.gamma

    return loss


def pyramid_targets(target: Tensor, levels: int) -> list[Tensor]:
    r"""Downsample the full-resolution targets to every level, coarsest first.

    The same antialiased bicubic downsampler as for the network inputs is used, so a
    coarse target is a prefiltered image rather than a plain cubic sampling of the target.
    """

    with no_grad():
        return [
            target if lvl == 0 else resize_bicubic(target, Fraction(1, 2**lvl))
            for lvl in reversed(range(levels))
        ]


def total_loss(outputs: Sequence[Tensor], gts: Sequence[Tensor], w: LossWeights) -> Tensor:
    r"""The loss of all levels weighted by the level weights.

    Parameters
    ----------
    outputs : Sequence[ianrelight.tensor.Tensor]
        The outputs of the network, coarsest level first.

    gts : Sequence[ianrelight.tensor.Tensor]
        The ground truth at the resolution of every output, coarsest level first.

    w : ianrelight.config.LossWeights
        The weights.

    Returns
    -------
    ianrelight.tensor.Tensor
        The total loss.

    Raises
    ------
    ianrelight.ShapeError
        If the number or the shapes of `outputs` and `gts` differ.

    ianrelight.ConfigError
        If the number of configured level weights differs from the number of levels.
    """

    if len(outputs) != len(gts) or not outputs:
        raise exceptions.ShapeError(
            f'total_loss requires one ground truth per output, got {len(outputs)} outputs '
            f'and {len(gts)} ground truths!'
        )

    levels = len(outputs)
    level_weights = w.weights_for(levels)
    loss: Tensor | None = None

    for rank, (out, gt) in enumerate(zip(outputs, gts, strict=True)):
        mu = level_weights[levels - 1 - rank]
        term = level_loss(out, gt, w) * mu
        loss = term if loss is None else loss + term

    return loss  # type: ignore[return-value]

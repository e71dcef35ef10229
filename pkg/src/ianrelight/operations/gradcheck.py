# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The finite-difference checks of the gradients of every differentiable operation."""

# Standard library
import logging
from collections.abc import Callable

# Third party
import numpy as np

# Local
from ianrelight.config import BlockVariant
from ianrelight.losses import gradient_loss, l1_loss, ssim_gray_loss
from ianrelight.network import IARBWeights, iarb_forward
from ianrelight.nn import (
    ConvWeights,
    LinearWeights,
    channel_std,
    conv2d,
    global_avg_pool,
    linear,
    relu,
    upsample_bilinear2x,
)
from ianrelight.nn.params import DILATIONS, STRIDES
from ianrelight.tensor import GradCheckResult, Tensor, check_gradients

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-4
LOSS_TOLERANCE = 1e-3
BLOCK_STEP = 1e-5


def _projection(rng: np.random.Generator, shape: tuple[int, ...]) -> Tensor:
    return Tensor(rng.standard_normal(shape))


def _away_from_zero(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return rng.choice([-1.0, 1.0], size=shape) * rng.uniform(0.1, 1.0, size=shape)


def _check_conv(rng: np.random.Generator, tolerance: float) -> list[GradCheckResult]:
    results = []
    for stride in STRIDES:
        for dilation in DILATIONS:
            x = rng.standard_normal((2, 3, 8, 8))
            kernel = rng.standard_normal((4, 3, 3, 3))
            bias = rng.standard_normal(4)
            out_size = 8 // stride
            r = _projection(rng, (2, 4, out_size, out_size))

            def f(x: Tensor, k: Tensor, b: Tensor, s: int = stride, d: int = dilation) -> Tensor:
                w = ConvWeights(kernel=k, bias=b, stride=s, dilation=d)
                return (conv2d(x, w) * r).sum()

            results.append(
                check_gradients(
                    f,
                    [x, kernel, bias],
                    name=f'conv2d stride={stride} dilation={dilation}',
                    tolerance=tolerance,
                )
            )
    return results


def _check_linear(rng: np.random.Generator, tolerance: float) -> GradCheckResult:
    r = _projection(rng, (3, 5))

    def f(x: Tensor, w: Tensor, b: Tensor) -> Tensor:
        return (linear(x, LinearWeights(weight=w, bias=b)) * r).sum()

    inputs = [rng.standard_normal((3, 7)), rng.standard_normal((5, 7)), rng.standard_normal(5)]
    return check_gradients(f, inputs, name='linear', tolerance=tolerance)


def _check_unary(
    rng: np.random.Generator,
    tolerance: float,
    name: str,
    op: Callable[[Tensor], Tensor],
    out_shape: tuple[int, ...],
    x: np.ndarray,
) -> GradCheckResult:
    r = _projection(rng, out_shape)
    return check_gradients(lambda t: (op(t) * r).sum(), [x], name=name, tolerance=tolerance)


def _check_iarb(rng: np.random.Generator, tolerance: float) -> GradCheckResult:
    c, d = 4, 12
    branches = [rng.standard_normal((c, c, 3, 3)) * 0.3 for _ in range(3)]
    branch_bias = [rng.standard_normal(c) * 0.1 for _ in range(3)]
    f_sigma_w, f_sigma_b = rng.standard_normal((d, d)) * 0.3, rng.standard_normal(d) * 0.1
    compress_b = rng.standard_normal(c) * 0.1
    r = _projection(rng, (2, c, 6, 6))

    def f(x: Tensor, k0: Tensor, f_mu_w: Tensor, compress_k: Tensor) -> Tensor:
        kernels = [k0, Tensor(branches[1]), Tensor(branches[2])]
        w = IARBWeights(
            variant=BlockVariant.FULL,
            branches=[
                ConvWeights(kernel=k, bias=Tensor(b), dilation=dil)
                for k, b, dil in zip(kernels, branch_bias, (1, 2, 3), strict=True)
            ],
            compress=ConvWeights(kernel=compress_k, bias=Tensor(compress_b)),
            f_mu=LinearWeights(weight=f_mu_w, bias=Tensor(np.zeros(d))),
            f_sigma=LinearWeights(weight=Tensor(f_sigma_w), bias=Tensor(f_sigma_b)),
        )
        return (iarb_forward(x, w) * r).sum()

    inputs = [
        rng.standard_normal((2, c, 6, 6)),
        branches[0],
        rng.standard_normal((d, d)) * 0.3,
        rng.standard_normal((c, d, 3, 3)) * 0.3,
    ]
    return check_gradients(f, inputs, name='iarb', h=BLOCK_STEP, tolerance=tolerance)


def _check_losses(rng: np.random.Generator, tolerance: float) -> list[GradCheckResult]:
    out = rng.uniform(0.25, 0.75, size=(1, 3, 12, 12))
    gt = out + _away_from_zero(rng, out.shape) * 0.2
    tolerance = max(tolerance, LOSS_TOLERANCE)

    return [
        check_gradients(loss, [out, gt], name=name, tolerance=tolerance)
        for name, loss in (
            ('l1_loss', l1_loss),
            ('ssim_gray_loss', ssim_gray_loss),
            ('gradient_loss', gradient_loss),
        )
    ]


def run_gradcheck_suite(
    seed: int = 0, tolerance: float = DEFAULT_TOLERANCE
) -> list[GradCheckResult]:
    r"""Check the gradients of the layer operations, the residual block and the losses.

    Every check runs in 64-bit precision with central differences on random tensors with
    extents of at most 12. The losses are accepted up to a relative error of 1e-3.

    Parameters
    ----------
    seed : int, default 0
        The seed of the random inputs.

    tolerance : float, default 1e-4
        The maximum accepted relative error of every check.

    Returns
    -------
    list[ianrelight.tensor.GradCheckResult]
        The result of every check.
    """

    rng = np.random.default_rng(seed)
    results = _check_conv(rng, tolerance)
    results.append(_check_linear(rng, tolerance))
    results.append(
        _check_unary(
            rng, tolerance, 'relu', relu, (2, 3, 5, 5), _away_from_zero(rng, (2, 3, 5, 5))
        )
    )
    results.append(
        _check_unary(
            rng,
            tolerance,
            'global_avg_pool',
            global_avg_pool,
            (2, 3),
            rng.standard_normal((2, 3, 5, 5)),
        )
    )
    results.append(
        _check_unary(
            rng, tolerance, 'channel_std', channel_std, (2, 3), rng.standard_normal((2, 3, 5, 5))
        )
    )
    results.append(
        _check_unary(
            rng,
            tolerance,
            'upsample_bilinear2x',
            upsample_bilinear2x,
            (2, 3, 10, 12),
            rng.standard_normal((2, 3, 5, 6)),
        )
    )
    results.append(_check_iarb(rng, tolerance))
    results.extend(_check_losses(rng, tolerance))

    for r in results:
        logger.log(
            logging.INFO if r.passed else logging.WARNING,
            f'gradcheck {r.name}: max relative error {r.max_rel_error:.2e}',
        )

    return results

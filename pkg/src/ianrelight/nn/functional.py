# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The layer primitives of the network.

Feature maps use the layout [N, C, H, W]. Convolutions are cross-correlations with zero
padding of ``dilation * (k - 1) // 2`` on every side, which preserves the spatial size at
stride 1 and yields ``ceil(H / stride)`` rows otherwise. The convolution gathers the k·k
shifted views of the padded input into a column array and contracts it with the kernel
using :func:`numpy.tensordot`.
"""

# Standard library
from collections.abc import Sequence

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.nn.params import ConvWeights, LinearWeights
from ianrelight.tensor import Function, Tensor, concat

STD_EPS = 1e-12


def _output_size(size: int, stride: int) -> int:
    return -(-size // stride)


class Conv2d(Function):
    def forward(
        self, x: np.ndarray, w: np.ndarray, b: np.ndarray, stride: int, dilation: int
    ) -> np.ndarray:
        n, c, h, wd = x.shape
        k = w.shape[2]
        pad = dilation * (k - 1) // 2
        ho, wo = _output_size(h, stride), _output_size(wd, stride)

        xp = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
        col = np.empty((n, c, k, k, ho, wo), dtype=x.dtype)
        for i in range(k):
            hi = i * dilation
            for j in range(k):
                wj = j * dilation
                rows = slice(hi, hi + stride * (ho - 1) + 1, stride)
                cols = slice(wj, wj + stride * (wo - 1) + 1, stride)
                col[:, :, i, j] = xp[:, :, rows, cols]

        self.col, self.w, self.x_shape = col, w, x.shape
        self.stride, self.dilation, self.pad = stride, dilation, pad

        y = np.tensordot(col, w, axes=((1, 2, 3), (1, 2, 3)))  # [N, Ho, Wo, O]
        return np.ascontiguousarray(y.transpose(0, 3, 1, 2)) + b[None, :, None, None]

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        gx = gw = gb = None
        col, w = self.col, self.w

        if self.needs_input_grad[1]:
            gw = np.tensordot(grad, col, axes=((0, 2, 3), (0, 4, 5)))
        if self.needs_input_grad[2]:
            gb = grad.sum(axis=(0, 2, 3))

        if self.needs_input_grad[0]:
            n, c, h, wd = self.x_shape
            k, s, d, pad = w.shape[2], self.stride, self.dilation, self.pad
            ho, wo = grad.shape[2:]
            gcol = np.tensordot(grad, w, axes=((1,), (0,))).transpose(0, 3, 4, 5, 1, 2)
            gxp = np.zeros((n, c, h + 2 * pad, wd + 2 * pad), dtype=grad.dtype)
            for i in range(k):
                hi = i * d
                for j in range(k):
                    wj = j * d
                    rows = slice(hi, hi + s * (ho - 1) + 1, s)
                    cols = slice(wj, wj + s * (wo - 1) + 1, s)
                    gxp[:, :, rows, cols] += gcol[:, :, i, j]
            gx = gxp[:, :, pad : pad + h, pad : pad + wd]

        return gx, gw, gb


def conv2d(x: Tensor, w: ConvWeights) -> Tensor:
    r"""Convolve a batch of feature maps.

    Parameters
    ----------
    x : ianrelight.tensor.Tensor
        The input of shape [N, Cin, H, W].

    w : ianrelight.nn.ConvWeights
        The kernel, bias, stride and dilation of the convolution.

    Returns
    -------
    ianrelight.tensor.Tensor
        The output of shape [N, Cout, ceil(H / stride), ceil(W / stride)].

    Raises
    ------
    ianrelight.ShapeError
        If `x` is not of rank 4 or the channels do not match the kernel.
    """

    if x.ndim != 4:  # noqa: PLR2004
        raise exceptions.ShapeError(
            f'conv2d expects an input of shape [N, C, H, W], got {x.shape}!'
        )
    if x.shape[1] != w.in_channels:
        raise exceptions.ShapeError(
            f'conv2d input has {x.shape[1]} channels but the kernel expects {w.in_channels}!'
        )

    return Conv2d.apply(x, w.kernel, w.bias, stride=w.stride, dilation=w.dilation)


class Linear(Function):
    def forward(self, x: np.ndarray, w: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.x, self.w = x, w
        return x @ w.T + b

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        gx = grad @ self.w if self.needs_input_grad[0] else None
        g2 = grad.reshape(-1, grad.shape[-1])
        gw = g2.T @ self.x.reshape(-1, self.x.shape[-1]) if self.needs_input_grad[1] else None
        gb = g2.sum(axis=0) if self.needs_input_grad[2] else None
        return gx, gw, gb


def linear(x: Tensor, w: LinearWeights) -> Tensor:
    r"""Project the trailing dimension of `x`: ``x · weightᵀ + bias``.

    Raises
    ------
    ianrelight.ShapeError
        If the trailing dimension of `x` differs from the input dimension of `w`.
    """

    if x.ndim < 1 or x.shape[-1] != w.in_dim:
        raise exceptions.ShapeError(
            f'linear expects a trailing dimension of {w.in_dim}, got shape {x.shape}!'
        )

    return Linear.apply(x, w.weight, w.bias)


class Relu(Function):
    def forward(self, x: np.ndarray) -> np.ndarray:
        self.mask = x > 0
        return np.where(self.mask, x, 0).astype(x.dtype, copy=False)

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return (grad * self.mask,)


def relu(x: Tensor) -> Tensor:
    r"""The rectified linear unit max(0, x) with a zero subgradient at 0."""
    return Relu.apply(x)


def _check_feature_map(x: Tensor, name: str) -> None:
    if x.ndim != 4:  # noqa: PLR2004
        raise exceptions.ShapeError(f'{name} expects shape [N, C, H, W], got {x.shape}!')


def global_avg_pool(x: Tensor) -> Tensor:
    r"""The spatial mean of every channel, [N, C, H, W] -> [N, C]."""

    _check_feature_map(x, 'global_avg_pool')
    return x.mean(axes=(2, 3))


def channel_std(x: Tensor) -> Tensor:
    r"""The population standard deviation of every channel, [N, C, H, W] -> [N, C].

    A constant of 1e-12 is added to the variance to keep the gradient of
    the square root finite for constant feature maps.
    """

    _check_feature_map(x, 'channel_std')
    centered = x - x.mean(axes=(2, 3), keepdims=True)
    variance = (centered * centered).mean(axes=(2, 3))
    return (variance + STD_EPS).sqrt()


def concat_channels(xs: Sequence[Tensor]) -> Tensor:
    r"""Concatenate feature maps along the channel axis.

    Raises
    ------
    ianrelight.ShapeError
        If the batch or spatial extents differ.
    """

    for x in xs:
        _check_feature_map(x, 'concat_channels')

    return concat(xs, axis=1)

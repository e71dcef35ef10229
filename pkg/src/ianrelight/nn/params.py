# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Containers of the learnable weights of convolution and linear layers."""

# Standard library
from dataclasses import dataclass

# Local
from ianrelight import exceptions
from ianrelight.tensor import Tensor

STRIDES = (1, 2)
DILATIONS = (1, 2, 3)


@dataclass(slots=True)
class ConvWeights:
    r"""The weights of a 2D convolution.

    Parameters
    ----------
    kernel : ianrelight.tensor.Tensor
        The kernel of shape [out_ch, in_ch, k, k] with k odd.

    bias : ianrelight.tensor.Tensor
        The bias of shape [out_ch].

    stride : int, default 1
        The stride, 1 or 2.

    dilation : int, default 1
        The dilation rate, 1, 2 or 3.

    Raises
    ------
    ianrelight.ShapeError
        If the shapes, the stride or the dilation are invalid.
    """

    kernel: Tensor
    bias: Tensor
    stride: int = 1
    dilation: int = 1

    def __post_init__(self) -> None:
        shape = self.kernel.shape
        if len(shape) != 4 or shape[2] != shape[3] or shape[2] % 2 == 0:  # noqa: PLR2004
            raise exceptions.ShapeError(
                'A convolution kernel must have shape [out_ch, in_ch, k, k] with k odd, '
                f'got {shape}!'
            )
        if self.bias.shape != (shape[0],):
            raise exceptions.ShapeError(
                f'The bias shape {self.bias.shape} does not match {shape[0]} output channels!'
            )
        if self.stride not in STRIDES:
            raise exceptions.ShapeError(f'stride must be one of {STRIDES}, got {self.stride}!')
        if self.dilation not in DILATIONS:
            raise exceptions.ShapeError(
                f'dilation must be one of {DILATIONS}, got {self.dilation}!'
            )

    @property
    def in_channels(self) -> int:
        return self.kernel.shape[1]

    @property
    def out_channels(self) -> int:
        return self.kernel.shape[0]

    @property
    def kernel_size(self) -> int:
        return self.kernel.shape[2]


@dataclass(slots=True)
class LinearWeights:
    r"""The weights of a linear projection.

    Parameters
    ----------
    weight : ianrelight.tensor.Tensor
        The weight matrix of shape [out_dim, in_dim].

    bias : ianrelight.tensor.Tensor
        The bias of shape [out_dim].

    Raises
    ------
    ianrelight.ShapeError
        If the shapes are inconsistent.
    """

    weight: Tensor
    bias: Tensor

    def __post_init__(self) -> None:
        if self.weight.ndim != 2:  # noqa: PLR2004
            raise exceptions.ShapeError(
                f'A linear weight must have shape [out_dim, in_dim], got {self.weight.shape}!'
            )
        if self.bias.shape != (self.weight.shape[0],):
            raise exceptions.ShapeError(
                f'The bias shape {self.bias.shape} does not match weight {self.weight.shape}!'
            )

    @property
    def in_dim(self) -> int:
        return self.weight.shape[1]

    @property
    def out_dim(self) -> int:
        return self.weight.shape[0]

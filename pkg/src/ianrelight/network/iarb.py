# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The illumination-aware residual block and the target light projector.

A block runs parallel dilated convolutions over its input and concatenates them into the
original response R. The per-channel mean and standard deviation of R are projected into the
descriptors desc_mu and desc_sigma, and R re-rendered as ``R · (desc_mu + desc_sigma) / 2``
is compressed back to the input channels and added to the input.
"""

# Standard library
from dataclasses import dataclass

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.config import BlockVariant
from ianrelight.nn import (
    ConvWeights,
    LinearWeights,
    channel_std,
    concat_channels,
    conv2d,
    global_avg_pool,
    linear,
    relu,
)
from ianrelight.tensor import Tensor, concat

SH_COEFFICIENTS = 9


@dataclass(slots=True)
class IARBWeights:
    r"""The weights of one residual block.

    Parameters
    ----------
    variant : ianrelight.config.BlockVariant
        The block variant.

    branches : list[ianrelight.nn.ConvWeights]
        The dilated 3x3 convolutions, empty for the vanilla variant.

    compress : ianrelight.nn.ConvWeights or None
        The 3x3 convolution compressing the concatenated branches to the input channels.

    f_mu : ianrelight.nn.LinearWeights or None
        The projection of the channel means. None if the variant does not use it.

    f_sigma : ianrelight.nn.LinearWeights or None
        The projection of the channel standard deviations. None if the variant does not use it.

    plain : list[ianrelight.nn.ConvWeights]
        The two plain convolutions of the vanilla variant, empty otherwise.

    Raises
    ------
    ianrelight.ShapeError
        If the channels of the weights do not fit together.
    """

    variant: BlockVariant
    branches: list[ConvWeights]
    compress: ConvWeights | None
    f_mu: LinearWeights | None = None
    f_sigma: LinearWeights | None = None
    plain: list[ConvWeights] | None = None

    def __post_init__(self) -> None:
        if self.variant == BlockVariant.VANILLA:
            if not self.plain or len(self.plain) != 2:  # noqa: PLR2004
                raise exceptions.ShapeError('A vanilla block requires two plain convolutions!')
            return

        if self.compress is None or not self.branches:
            raise exceptions.ShapeError(
                f'A "{self.variant}" block requires dilated branches and a compression!'
            )

        branch_channels = {w.out_channels for w in self.branches}
        if len(branch_channels) != 1:
            raise exceptions.ShapeError(
                f'The dilated branches have unequal output channels {sorted(branch_channels)}!'
            )
        if self.compress.in_channels != self.descriptor_channels:
            raise exceptions.ShapeError(
                f'The compression expects {self.compress.in_channels} channels but the branches '
                f'produce {self.descriptor_channels}!'
            )
        if self.compress.out_channels != self.in_channels:
            raise exceptions.ShapeError(
                f'The compression outputs {self.compress.out_channels} channels but the block '
                f'input has {self.in_channels}!'
            )
        for projection in (self.f_mu, self.f_sigma):
            if projection is not None and projection.out_dim != self.descriptor_channels:
                raise exceptions.ShapeError(
                    f'A descriptor projection outputs {projection.out_dim} values, '
                    f'expected {self.descriptor_channels}!'
                )

    @property
    def in_channels(self) -> int:
        r"""The channels of the block input and output."""

        if self.variant == BlockVariant.VANILLA:
            return self.plain[0].in_channels  # type: ignore[index]
        return self.branches[0].in_channels

    @property
    def descriptor_channels(self) -> int:
        r"""The channels of the concatenated branches."""
        return sum(w.out_channels for w in self.branches)

    @property
    def light_conditioned(self) -> bool:
        r"""True if the descriptor projections expect a light embedding."""

        projection = self.f_mu or self.f_sigma
        return projection is not None and projection.in_dim > self.descriptor_channels


@dataclass(slots=True)
class Descriptor:
    r"""The illumination descriptors of a block, each of shape [N, D]."""

    desc_mu: Tensor
    desc_sigma: Tensor


def dilated_branches(f_in: Tensor, w: IARBWeights) -> Tensor:
    r"""Run the dilated branches and concatenate them along the channels.

    Parameters
    ----------
    f_in : ianrelight.tensor.Tensor
        The block input of shape [N, C, H, W].

    w : ianrelight.network.IARBWeights
        The block weights.

    Returns
    -------
    ianrelight.tensor.Tensor
        The original response R of shape [N, D, H, W].

    Raises
    ------
    ianrelight.ShapeError
        If the channels of `f_in` do not match the branches.
    """

    return concat_channels([conv2d(f_in, branch) for branch in w.branches])


def _project(stat: Tensor, w: LinearWeights, light_embed: Tensor | None) -> Tensor:
    x = stat if light_embed is None else concat([stat, light_embed], axis=1)
    return linear(x, w)


def extract_descriptors(
    r_ori: Tensor, w: IARBWeights, light_embed: Tensor | None = None
) -> Descriptor:
    r"""Compute the illumination descriptors of the original response.

    The channel means and standard deviations of `r_ori`, each optionally concatenated with
    `light_embed`, are projected by F_mu and F_sigma. The mean-attention variant uses desc_mu
    for both descriptors and the std-attention variant uses desc_sigma for both.

    Parameters
    ----------
    r_ori : ianrelight.tensor.Tensor
        The original response of shape [N, D, H, W].

    w : ianrelight.network.IARBWeights
        The block weights.

    light_embed : ianrelight.tensor.Tensor or None, default None
        The light embedding [N, E] of a light-conditioned block.

    Returns
    -------
    ianrelight.network.Descriptor
        The descriptors.

    Raises
    ------
    ianrelight.ShapeError
        If the presence of `light_embed` does not match the weights or
        the variant has no descriptor projections.
    """

    if not w.variant.has_descriptor:
        raise exceptions.ShapeError(f'Block variant "{w.variant}" has no descriptors!')

    if w.light_conditioned and light_embed is None:
        raise exceptions.ShapeError('The block is light-conditioned but no light embedding given!')
    if not w.light_conditioned and light_embed is not None:
        raise exceptions.ShapeError('A light embedding was given to an unconditioned block!')

    desc_mu = desc_sigma = None
    if w.f_mu is not None:
        desc_mu = _project(global_avg_pool(r_ori), w.f_mu, light_embed)
    if w.f_sigma is not None:
        desc_sigma = _project(channel_std(r_ori), w.f_sigma, light_embed)

    desc_mu = desc_sigma if desc_mu is None else desc_mu
    desc_sigma = desc_mu if desc_sigma is None else desc_sigma

    return Descriptor(desc_mu=desc_mu, desc_sigma=desc_sigma)  # type: ignore[arg-type]


def iarb_forward(f_in: Tensor, w: IARBWeights, light_embed: Tensor | None = None) -> Tensor:
    r"""Run one residual block.

    Parameters
    ----------
    f_in : ianrelight.tensor.Tensor
        The input features of shape [N, C, H, W].

    w : ianrelight.network.IARBWeights
        The block weights.

    light_embed : ianrelight.tensor.Tensor or None, default None
        The light embedding [N, E] of a light-conditioned block.

    Returns
    -------
    ianrelight.tensor.Tensor
        The output features of shape [N, C, H, W].
    """

    if w.variant == BlockVariant.VANILLA:
        conv0, conv1 = w.plain  # type: ignore[misc]
        return conv2d(relu(conv2d(f_in, conv0)), conv1) + f_in

    r_ori = dilated_branches(f_in, w)

    if not w.variant.has_descriptor:
        return conv2d(r_ori, w.compress) + f_in  # type: ignore[arg-type]

    desc = extract_descriptors(r_ori, w, light_embed=light_embed)
    n, d = desc.desc_mu.shape
    attention = ((desc.desc_mu + desc.desc_sigma) * 0.5).reshape(n, d, 1, 1)

    return conv2d(r_ori * attention, w.compress) + f_in  # type: ignore[arg-type]


@dataclass(slots=True)
class LightProjectorWeights:
    r"""The weights of the perceptron mapping SH coefficients to the block light embeddings.

    Parameters
    ----------
    layers : list[ianrelight.nn.LinearWeights]
        The three layers, 9 -> hidden -> hidden -> n_embeddings · embed_dim.

    n_embeddings : int
        The number of embeddings, one per residual block.

    Raises
    ------
    ianrelight.ShapeError
        If the output of the last layer is not divisible by `n_embeddings`.
    """

    layers: list[LinearWeights]
    n_embeddings: int

    def __post_init__(self) -> None:
        if self.layers[0].in_dim != SH_COEFFICIENTS:
            raise exceptions.ShapeError(
                f'The light projector must take {SH_COEFFICIENTS} coefficients, '
                f'got {self.layers[0].in_dim}!'
            )
        if self.layers[-1].out_dim % self.n_embeddings:
            raise exceptions.ShapeError(
                f'The projector output {self.layers[-1].out_dim} is not divisible '
                f'into {self.n_embeddings} embeddings!'
            )

    @property
    def embed_dim(self) -> int:
        return self.layers[-1].out_dim // self.n_embeddings


def project_light(light: Tensor | np.ndarray, w: LightProjectorWeights) -> list[Tensor]:
    r"""Map SH lighting coefficients to one embedding per residual block.

    Parameters
    ----------
    light : ianrelight.tensor.Tensor or numpy.ndarray
        The coefficients of shape [N, 9] or [9].

    w : ianrelight.network.LightProjectorWeights
        The projector weights.

    Returns
    -------
    list[ianrelight.tensor.Tensor]
        `w.n_embeddings` contiguous embeddings of shape [N, embed_dim]. They are assigned to
        the blocks in order, from the first block of the coarsest level to the last block of
        the finest level.

    Raises
    ------
    ianrelight.ShapeError
        If `light` does not have 9 coefficients.
    """

    x = light if isinstance(light, Tensor) else Tensor(light, dtype=w.layers[0].weight.dtype)
    if x.ndim == 1:
        x = x.reshape(1, -1)
    if x.ndim != 2 or x.shape[1] != SH_COEFFICIENTS:  # noqa: PLR2004
        raise exceptions.ShapeError(
            f'A light must have {SH_COEFFICIENTS} SH coefficients, got shape {x.shape}!'
        )

    for i, layer in enumerate(w.layers):
        x = linear(x, layer)
        if i < len(w.layers) - 1:
            x = relu(x)

    e = w.embed_dim
    return [x[:, i * e : (i + 1) * e] for i in range(w.n_embeddings)]

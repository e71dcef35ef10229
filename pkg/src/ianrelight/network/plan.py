# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The layer plan of the network.

The plan lists every learnable layer of a configuration in initialization order together with
its shape, stride, dilation and the resolution of its output. It is the single source of the
layer names used by the network, the parameter and MACs accounting and the checkpoints.
"""

# Standard library
import math
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum

# Local
from ianrelight.config import DGGE_STAGES, BlockVariant, IANConfig

KERNEL_SIZE = 3
SH_COEFFICIENTS = 9
IMAGE_CHANNELS = 3
ENCODER_CONVS = 6
DECODER_CONVS_PER_SCALE = 3


class LayerKind(StrEnum):
    r"""The kinds of learnable layers."""

    CONV = 'conv'
    LINEAR = 'linear'


@dataclass(frozen=True, slots=True)
class LayerSpec:
    r"""A learnable layer of the network.

    Parameters
    ----------
    name : str
        The unique dotted name of the layer, e.g. "level0.block1.compress".

    kind : ianrelight.network.LayerKind
        Convolution or linear projection.

    in_dim : int
        The input channels or features.

    out_dim : int
        The output channels or features.

    kernel_size : int, default 1
        The kernel size of a convolution.

    stride : int, default 1
        The stride of a convolution.

    dilation : int, default 1
        The dilation rate of a convolution.

    scale : int, default 1
        The output resolution of a convolution as a divisor of the input resolution.
        Linear layers run once per sample and have scale 1.

    module : str, default ''
        The module of the layer in the accounting breakdown, e.g. "level0.encoder".
    """

    name: str
    kind: LayerKind
    in_dim: int
    out_dim: int
    kernel_size: int = 1
    stride: int = 1
    dilation: int = 1
    scale: int = 1
    module: str = ''

    @property
    def weight_shape(self) -> tuple[int, ...]:
        if self.kind == LayerKind.CONV:
            return (self.out_dim, self.in_dim, self.kernel_size, self.kernel_size)
        return (self.out_dim, self.in_dim)

    @property
    def bias_shape(self) -> tuple[int]:
        return (self.out_dim,)

    @property
    def n_params(self) -> int:
        r"""The number of weights and biases of the layer."""

        return math.prod(self.weight_shape) + self.out_dim

    def macs(self, height: int, width: int) -> int:
        r"""The multiply-accumulates of the layer for one input of `height` x `width` pixels."""

        weights = self.in_dim * self.out_dim * self.kernel_size**2
        if self.kind == LayerKind.LINEAR:
            return weights
        return weights * -(-height // self.scale) * -(-width // self.scale)


def _conv(
    name: str,
    in_dim: int,
    out_dim: int,
    scale: int,
    module: str,
    stride: int = 1,
    dilation: int = 1,
) -> LayerSpec:
    return LayerSpec(
        name=name,
        kind=LayerKind.CONV,
        in_dim=in_dim,
        out_dim=out_dim,
        kernel_size=KERNEL_SIZE,
        stride=stride,
        dilation=dilation,
        scale=scale,
        module=module,
    )


def _linear(name: str, in_dim: int, out_dim: int, module: str) -> LayerSpec:
    return LayerSpec(
        name=name, kind=LayerKind.LINEAR, in_dim=in_dim, out_dim=out_dim, module=module
    )


def encoder_layers(config: IANConfig, level: int) -> Iterator[LayerSpec]:
    r"""The six convolutions of the encoder of `level` producing three feature scales."""

    c = config.base_channels
    in_dim = IMAGE_CHANNELS if level == config.levels - 1 else 2 * IMAGE_CHANNELS
    module = f'level{level}.encoder'

    for i in range(ENCODER_CONVS):
        stride = 2 if i in (2, 4) else 1
        yield _conv(
            f'{module}.conv{i}',
            in_dim=in_dim if i == 0 else c,
            out_dim=c,
            scale=2 ** (level + i // 2),
            module=module,
            stride=stride,
        )


def block_layers(config: IANConfig, level: int, block: int) -> Iterator[LayerSpec]:
    r"""The layers of one residual block of the bottleneck of `level`."""

    c, variant = config.base_channels, config.block_variant
    scale = 2 ** (level + 2)
    module = f'level{level}.blocks'
    prefix = f'level{level}.block{block}'

    if variant == BlockVariant.VANILLA:
        for i in range(2):
            yield _conv(f'{prefix}.conv{i}', c, c, scale=scale, module=module)
        return

    for i, dilation in enumerate(variant.dilations):
        yield _conv(
            f'{prefix}.branch{i}', c, config.branch_channels, scale, module, dilation=dilation
        )

    d = config.descriptor_channels
    d_in = d + config.light_embed_dim * config.use_light_projector
    if variant in (BlockVariant.FULL, BlockVariant.WO_DILATED, BlockVariant.MEAN_ATT):
        yield _linear(f'{prefix}.f_mu', d_in, d, module=module)
    if variant in (BlockVariant.FULL, BlockVariant.WO_DILATED, BlockVariant.STD_ATT):
        yield _linear(f'{prefix}.f_sigma', d_in, d, module=module)

    yield _conv(f'{prefix}.compress', d, c, scale=scale, module=module)


def decoder_layers(config: IANConfig, level: int) -> Iterator[LayerSpec]:
    r"""The convolutions of the decoder of `level`, coarsest scale first, and the output layer."""

    c = config.base_channels
    module = f'level{level}.decoder'

    for i in reversed(range(3)):
        for j in range(DECODER_CONVS_PER_SCALE):
            yield _conv(f'{module}.scale{i}.conv{j}', c, c, scale=2 ** (level + i), module=module)

    yield _conv(f'{module}.out', c, IMAGE_CHANNELS, scale=2**level, module=module)


def level_layers(config: IANConfig, level: int) -> Iterator[LayerSpec]:
    r"""All layers of pyramid `level`."""

    yield from encoder_layers(config, level)
    for block in range(config.blocks_per_level):
        yield from block_layers(config, level, block)
    yield from decoder_layers(config, level)


def dgge_layers(config: IANConfig) -> Iterator[LayerSpec]:
    r"""The two convolutions of each of the five stages of the geometry encoder."""

    c = config.base_channels
    for k in range(DGGE_STAGES):
        yield _conv(
            f'dgge.stage{k}.conv0',
            in_dim=config.guidance_channels if k == 0 else c,
            out_dim=c,
            scale=2**k,
            module='dgge',
            stride=1 if k == 0 else 2,
        )
        yield _conv(f'dgge.stage{k}.conv1', c, c, scale=2**k, module='dgge')


def projector_layers(config: IANConfig) -> Iterator[LayerSpec]:
    r"""The three layers of the light projector."""

    hidden, module = config.projector_hidden, 'projector'
    yield _linear('projector.fc0', SH_COEFFICIENTS, hidden, module=module)
    yield _linear('projector.fc1', hidden, hidden, module=module)
    yield _linear(
        'projector.fc2', hidden, config.n_blocks * config.light_embed_dim, module=module
    )


def build_plan(config: IANConfig) -> list[LayerSpec]:
    r"""The learnable layers of a configuration in initialization order.

    The order is the geometry encoder, the light projector and then the pyramid levels from
    the coarsest to the finest. Disabled components contribute no layers.
    """

    plan: list[LayerSpec] = []
    if config.use_dgge:
        plan.extend(dgge_layers(config))
    if config.use_light_projector:
        plan.extend(projector_layers(config))
    for level in reversed(range(config.levels)):
        plan.extend(level_layers(config, level))

    return plan


def parameter_names(config: IANConfig) -> list[str]:
    r"""The names of all parameter arrays of a configuration."""
    return [f'{spec.name}.{p}' for spec in build_plan(config) for p in ('weight', 'bias')]

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The pyramid of encoder-decoder generators forming the illumination-aware network.

Level 0 runs at full resolution and level l at 1 / 2^l of it. The coarsest level relights the
downsampled input and every finer level refines the bicubic-upsampled output of the level
below it, concatenated with its own downsampled input. Every level predicts a residual that is
added to its resampled input image.
"""

# Standard library
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.config import DGGE_STAGES, BlockVariant, IANConfig
from ianrelight.network.geometry import DGGEWeights, GuidancePack, build_guidance, dgge_forward
from ianrelight.network.iarb import IARBWeights, LightProjectorWeights, iarb_forward, project_light
from ianrelight.network.plan import (
    DECODER_CONVS_PER_SCALE,
    ENCODER_CONVS,
    LayerKind,
    LayerSpec,
    build_plan,
)
from ianrelight.nn import (
    ConvWeights,
    LinearWeights,
    concat_channels,
    conv2d,
    relu,
    resize_bicubic,
    upsample_bilinear2x,
    xavier_init,
    zeros,
)
from ianrelight.tensor import Tensor, no_grad

logger = logging.getLogger(__name__)

type Layer = ConvWeights | LinearWeights


@dataclass(slots=True)
class LevelWeights:
    r"""The weights of one pyramid level.

    Parameters
    ----------
    encoder : list[ianrelight.nn.ConvWeights]
        The six encoder convolutions. The third and fifth have stride 2.

    blocks : list[ianrelight.network.IARBWeights]
        The residual blocks of the bottleneck.

    decoder : list[list[ianrelight.nn.ConvWeights]]
        The three convolutions of each decoder scale, coarsest scale first.

    out : ianrelight.nn.ConvWeights
        The final convolution to the three channel residual image.
    """

    encoder: list[ConvWeights]
    blocks: list[IARBWeights]
    decoder: list[list[ConvWeights]]
    out: ConvWeights

    def __post_init__(self) -> None:
        if len(self.encoder) != ENCODER_CONVS:
            raise exceptions.ShapeError(
                f'A level requires {ENCODER_CONVS} encoder convolutions, got {len(self.encoder)}!'
            )
        if len(self.decoder) != 3 or any(  # noqa: PLR2004
            len(s) != DECODER_CONVS_PER_SCALE for s in self.decoder
        ):
            raise exceptions.ShapeError(
                'A level requires three decoder scales of three convolutions!'
            )

    @property
    def in_channels(self) -> int:
        return self.encoder[0].in_channels


def encoder_forward(
    x: Tensor, w: LevelWeights, guidance: Sequence[Tensor | None] | None = None
) -> tuple[Tensor, Tensor, Tensor]:
    r"""Encode the input of a level into features at three scales.

    Parameters
    ----------
    x : ianrelight.tensor.Tensor
        The level input [N, 3 or 6, H, W].

    w : ianrelight.network.LevelWeights
        The level weights.

    guidance : Sequence[ianrelight.tensor.Tensor or None] or None, default None
        The geometry features added to the encoder features of each scale,
        C^{l+i} for scale i. A None entry adds nothing.

    Returns
    -------
    tuple[ianrelight.tensor.Tensor, ianrelight.tensor.Tensor, ianrelight.tensor.Tensor]
        The features E_0, E_1 and E_2 at H, H/2 and H/4 after the guidance fusion.

    Raises
    ------
    ianrelight.ShapeError
        If the channels of `x` or the size of a guidance feature do not match.
    """

    if x.ndim != 4 or x.shape[1] != w.in_channels:  # noqa: PLR2004
        raise exceptions.ShapeError(
            f'The level expects an input with {w.in_channels} channels, got {x.shape}!'
        )

    features: list[Tensor] = []
    h = x
    for i in range(3):
        conv_a, conv_b = w.encoder[2 * i], w.encoder[2 * i + 1]
        h = relu(conv2d(h, conv_a))
        h = conv2d(h, conv_b)
        if i < 2:  # noqa: PLR2004
            h = relu(h)

        g = None if guidance is None else guidance[i]
        if g is not None:
            if g.shape != h.shape:
                raise exceptions.ShapeError(
                    f'Guidance feature {g.shape} does not match encoder feature {h.shape} '
                    f'at scale {i}!'
                )
            h = h + g

        features.append(h)

    return features[0], features[1], features[2]


def decoder_forward(
    bottleneck_out: Tensor,
    encoded: Sequence[Tensor],
    w: LevelWeights,
    coarser: Sequence[Tensor] | None = None,
    use_ilsc: bool = True,
    use_clsc: bool = True,
) -> tuple[Tensor, list[Tensor]]:
    r"""Decode the bottleneck output of a level into a residual image.

    At decoder scale i, coarsest first, three convolutions with ReLU are followed by the
    intra-level skip ``D_i = D_i + E_i`` and the cross-level skip ``D_i = D_i + up(D^{l+1}_i)``.
    Between the scales the features are upsampled 2x bilinearly.

    Parameters
    ----------
    bottleneck_out : ianrelight.tensor.Tensor
        The output of the last residual block [N, C, H/4, W/4].

    encoded : Sequence[ianrelight.tensor.Tensor]
        The encoder features E_0, E_1 and E_2.

    w : ianrelight.network.LevelWeights
        The level weights.

    coarser : Sequence[ianrelight.tensor.Tensor] or None, default None
        The decoder features D_0, D_1 and D_2 of the next coarser level.
        None at the coarsest level.

    use_ilsc : bool, default True
        True if the encoder features are added.

    use_clsc : bool, default True
        True if the upsampled features of the coarser level are added.

    Returns
    -------
    image_residual : ianrelight.tensor.Tensor
        The residual image [N, 3, H, W].

    decoder_feats : list[ianrelight.tensor.Tensor]
        The decoder features D_0, D_1 and D_2 of this level.

    Raises
    ------
    ianrelight.ShapeError
        If the skip connections do not type-check.
    """

    feats: list[Tensor | None] = [None, None, None]
    h = relu(bottleneck_out)

    for step, i in enumerate(reversed(range(3))):
        if step > 0:
            h = upsample_bilinear2x(h)
        for conv in w.decoder[step]:
            h = relu(conv2d(h, conv))

        if use_ilsc:
            if encoded[i].shape != h.shape:
                raise exceptions.ShapeError(
                    f'Encoder feature {encoded[i].shape} does not match decoder feature '
                    f'{h.shape} at scale {i}!'
                )
            h = h + encoded[i]

        if use_clsc and coarser is not None:
            up = upsample_bilinear2x(coarser[i])
            if up.shape != h.shape:
                raise exceptions.ShapeError(
                    f'Coarser decoder feature {up.shape} does not match {h.shape} at scale {i}!'
                )
            h = h + up

        feats[i] = h

    return conv2d(h, w.out), feats  # type: ignore[return-value]


def select_guidance(features: Sequence[Tensor] | None, level: int) -> list[Tensor | None]:
    r"""Select the geometry features fused into the encoder scales of `level`.

    Scale i of level l receives C^{l+i}. Indices beyond the last geometry encoder
    stage, reachable with 4 levels, receive no guidance.
    """

    if features is None:
        return [None, None, None]
    return [features[level + i] if level + i < len(features) else None for i in range(3)]


def _check_inputs(
    image: Tensor, config: IANConfig, guidance: GuidancePack | None, light: object
) -> None:
    if image.ndim != 4 or image.shape[1] != 3:  # noqa: PLR2004
        raise exceptions.ShapeError(
            f'The input image must have shape [N, 3, H, W], got {image.shape}!'
        )

    config.check_input_size(*image.shape[2:])

    if config.use_dgge and guidance is None:
        raise exceptions.ShapeError('The network uses DGGE but no depth guidance was given!')
    if guidance is not None and guidance.size != image.shape[2:]:
        raise exceptions.ShapeError(
            f'The guidance size {guidance.size} does not match the image size {image.shape[2:]}!'
        )
    if config.use_light_projector and light is None:
        raise exceptions.ShapeError('The network is light-conditioned but no light was given!')
    if not config.use_light_projector and light is not None:
        raise exceptions.ShapeError('A light was given to a network without a light projector!')


class IANetwork:
    r"""The illumination-aware network.

    Parameters
    ----------
    config : ianrelight.config.IANConfig
        The architecture.

    layers : Mapping[str, ianrelight.nn.ConvWeights | ianrelight.nn.LinearWeights]
        The weights of every layer of the layer plan of `config` by name.

    Raises
    ------
    ianrelight.ShapeError
        If `layers` does not match the layer plan of `config`.
    """

    def __init__(self, config: IANConfig, layers: Mapping[str, Layer]) -> None:
        self.config = config
        self.plan = build_plan(config)
        self.layers = dict(layers)

        expected = {spec.name for spec in self.plan}
        if missing := expected.difference(self.layers):
            raise exceptions.ShapeError(f'Missing layers: {sorted(missing)[:5]}')

        self.dgge = self._build_dgge() if config.use_dgge else None
        self.projector = self._build_projector() if config.use_light_projector else None
        self.levels = [self._build_level(level) for level in range(config.levels)]

    def _conv(self, name: str) -> ConvWeights:
        return self.layers[name]  # type: ignore[return-value]

    def _build_dgge(self) -> DGGEWeights:
        return DGGEWeights(
            stages=[
                (self._conv(f'dgge.stage{k}.conv0'), self._conv(f'dgge.stage{k}.conv1'))
                for k in range(DGGE_STAGES)
            ]
        )

    def _build_projector(self) -> LightProjectorWeights:
        layers = [self.layers[f'projector.fc{i}'] for i in range(3)]
        return LightProjectorWeights(
            layers=layers,  # type: ignore[arg-type]
            n_embeddings=self.config.n_blocks,
        )

    def _build_block(self, prefix: str) -> IARBWeights:
        variant = self.config.block_variant
        if variant == BlockVariant.VANILLA:
            plain = [self._conv(f'{prefix}.conv{i}') for i in range(2)]
            return IARBWeights(variant=variant, branches=[], compress=None, plain=plain)

        return IARBWeights(
            variant=variant,
            branches=[self._conv(f'{prefix}.branch{i}') for i in range(len(variant.dilations))],
            compress=self._conv(f'{prefix}.compress'),
            f_mu=self.layers.get(f'{prefix}.f_mu'),  # type: ignore[arg-type]
            f_sigma=self.layers.get(f'{prefix}.f_sigma'),  # type: ignore[arg-type]
        )

    def _build_level(self, level: int) -> LevelWeights:
        enc, dec = f'level{level}.encoder', f'level{level}.decoder'
        return LevelWeights(
            encoder=[self._conv(f'{enc}.conv{i}') for i in range(ENCODER_CONVS)],
            blocks=[
                self._build_block(f'level{level}.block{b}')
                for b in range(self.config.blocks_per_level)
            ],
            decoder=[
                [self._conv(f'{dec}.scale{i}.conv{j}') for j in range(DECODER_CONVS_PER_SCALE)]
                for i in reversed(range(3))
            ],
            out=self._conv(f'{dec}.out'),
        )

    def parameters(self) -> dict[str, Tensor]:
        r"""The parameter tensors by name in the order of the layer plan."""

        params: dict[str, Tensor] = {}
        for spec in self.plan:
            layer = self.layers[spec.name]
            weight = layer.kernel if isinstance(layer, ConvWeights) else layer.weight
            params[f'{spec.name}.weight'] = weight
            params[f'{spec.name}.bias'] = layer.bias

        return params

    @property
    def dtype(self) -> np.dtype:
        r"""The floating point type of the parameters."""
        return next(iter(self.parameters().values())).dtype

    @property
    def n_params(self) -> int:
        r"""The number of stored weights and biases."""
        return sum(p.size for p in self.parameters().values())

    def zero_grad(self) -> None:
        for p in self.parameters().values():
            p.zero_grad()

    def forward(
        self,
        image: Tensor,
        guidance: GuidancePack | None = None,
        light: Tensor | np.ndarray | None = None,
    ) -> list[Tensor]:
        r"""Relight a batch of images.

        Parameters
        ----------
        image : ianrelight.tensor.Tensor
            The input images [N, 3, H, W] with H and W divisible by
            :attr:`IANConfig.size_multiple`.

        guidance : ianrelight.network.GuidancePack or None, default None
            The geometry guidance. Required if the network uses DGGE and ignored otherwise.

        light : ianrelight.tensor.Tensor or numpy.ndarray or None, default None
            The target light as SH coefficients [N, 9]. Required if and only if the network
            has a light projector.

        Returns
        -------
        list[ianrelight.tensor.Tensor]
            The unclamped outputs of every level, coarsest first, at H / 2^(L-1) to H.

        Raises
        ------
        ianrelight.ShapeError
            If the inputs do not match the configuration.
        """

        config = self.config
        _check_inputs(image, config, guidance if config.use_dgge else None, light)

        dgge_feats = (
            dgge_forward(guidance, self.dgge, config)  # type: ignore[arg-type]
            if self.dgge is not None
            else None
        )
        embeddings = (
            project_light(light, self.projector)  # type: ignore[arg-type]
            if self.projector is not None
            else None
        )

        outputs: list[Tensor] = []
        coarser_feats: list[Tensor] | None = None
        prev: Tensor | None = None
        n_blocks = config.blocks_per_level

        for rank, level in enumerate(reversed(range(config.levels))):
            x_l = image if level == 0 else resize_bicubic(image, Fraction(1, 2**level))
            inp = x_l if prev is None else concat_channels([x_l, resize_bicubic(prev, 2)])

            encoded = encoder_forward(
                inp, self.levels[level], guidance=select_guidance(dgge_feats, level)
            )

            h = encoded[2]
            for b, block in enumerate(self.levels[level].blocks):
                embed = None if embeddings is None else embeddings[rank * n_blocks + b]
                h = iarb_forward(h, block, light_embed=embed)

            residual, coarser_feats = decoder_forward(
                h,
                encoded,
                self.levels[level],
                coarser=coarser_feats,
                use_ilsc=config.use_ilsc,
                use_clsc=config.use_clsc,
            )
            prev = residual + x_l if config.use_icsc else residual
            outputs.append(prev)

        return outputs

    __call__ = forward


def init_layers(plan: Sequence[LayerSpec], seed: int | np.random.Generator) -> dict[str, Layer]:
    r"""Initialize the layers of a plan.

    Weights are drawn from the Xavier uniform distribution in plan order from a single
    generator and biases are zero.
    """

    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    layers: dict[str, Layer] = {}

    for spec in plan:
        weight = xavier_init(spec.weight_shape, rng, name=f'{spec.name}.weight')
        bias = zeros(spec.bias_shape, name=f'{spec.name}.bias')
        if spec.kind == LayerKind.CONV:
            layers[spec.name] = ConvWeights(
                kernel=weight, bias=bias, stride=spec.stride, dilation=spec.dilation
            )
        else:
            layers[spec.name] = LinearWeights(weight=weight, bias=bias)

    return layers


def build_network(config: IANConfig, seed: int = 0) -> IANetwork:
    r"""Create a network with freshly initialized weights.

    Parameters
    ----------
    config : ianrelight.config.IANConfig
        The architecture.

    seed : int, default 0
        The seed of the weight initialization.

    Returns
    -------
    ianrelight.network.IANetwork
        The network.
    """

    plan = build_plan(config)
    network = IANetwork(config, init_layers(plan, seed))
    logger.debug(f'Built a network with {len(plan)} layers and {network.n_params} parameters.')

    return network


def relight(
    model: IANetwork,
    image: np.ndarray,
    depth: np.ndarray | None = None,
    light: np.ndarray | None = None,
) -> list[np.ndarray]:
    r"""Relight images and clamp the outputs of every level to [0, 1].

    Parameters
    ----------
    model : ianrelight.network.IANetwork
        The network.

    image : numpy.ndarray
        An image [3, H, W] or a batch [N, 3, H, W] with values in [0, 1].

    depth : numpy.ndarray or None, default None
        The raw depth [1, H, W] or [N, 1, H, W]. Required if the network uses DGGE.

    light : numpy.ndarray or None, default None
        The target light as 9 SH coefficients, [9] or [N, 9].

    Returns
    -------
    list[numpy.ndarray]
        The clamped outputs, coarsest level first, with the batch axis of `image`.
    """

    batched = image.ndim == 4  # noqa: PLR2004
    x = image if batched else image[None]

    guidance = None
    if model.config.use_dgge and depth is not None:
        guidance = build_guidance(depth if depth.ndim == 4 else depth[None])  # noqa: PLR2004

    _light = None if light is None else np.atleast_2d(light)
    if _light is not None and _light.shape[0] == 1 and x.shape[0] > 1:
        _light = np.repeat(_light, x.shape[0], axis=0)

    with no_grad():
        outputs = model(Tensor(x, dtype=model.dtype), guidance=guidance, light=_light)

    clamped = [np.clip(out.data, 0.0, 1.0) for out in outputs]
    return clamped if batched else [out[0] for out in clamped]

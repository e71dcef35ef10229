# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The configuration of the network architecture and the training objective."""

# Standard library
from enum import StrEnum
from typing import Any, Self

# Third party
from pydantic import Field, NonNegativeFloat, PositiveFloat, model_validator

# Local
from ianrelight import exceptions
from ianrelight.config.core import BaseConfigModel

ENCODER_SCALES = 3
DGGE_STAGES = 5


class BlockVariant(StrEnum):
    r"""The variants of the residual blocks in the bottleneck of each level.

    Members
    -------
    FULL
        Dilated branches with the mean and standard deviation descriptor product.

    VANILLA
        Two plain 3x3 convolutions and a residual connection.

    WO_ATT
        Dilated branches and the compression convolution without the descriptor product.

    WO_DILATED
        The full block with all three branches at dilation 1.

    MEAN_ATT
        The standard deviation descriptor is replaced by the mean descriptor.

    STD_ATT
        The mean descriptor is replaced by the standard deviation descriptor.
    """

    FULL = 'full'
    VANILLA = 'vanilla'
    WO_ATT = 'wo_att'
    WO_DILATED = 'wo_dilated'
    MEAN_ATT = 'mean_att'
    STD_ATT = 'std_att'

    @property
    def has_descriptor(self) -> bool:
        r"""True if the variant multiplies the branch features by the descriptors."""
        return self not in (BlockVariant.VANILLA, BlockVariant.WO_ATT)

    @property
    def dilations(self) -> tuple[int, ...]:
        r"""The dilation rates of the parallel branches."""

        if self == BlockVariant.VANILLA:
            return ()
        if self == BlockVariant.WO_DILATED:
            return (1, 1, 1)
        return (1, 2, 3)


class IANConfig(BaseConfigModel):
    r"""The architecture of the illumination-aware network.

    Parameters
    ----------
    levels : int, default 3
        The number of pyramid levels L in [1, 4]. Level 0 runs at full resolution
        and level l at 1 / 2^l of it.

    blocks_per_level : int, default 4
        The number of residual blocks N in [1, 6] in the bottleneck of every level.

    base_channels : int, default 48
        The channels of the encoder, decoder and geometry encoder features
        and of each dilated branch.

    block_variant : ianrelight.config.BlockVariant, default BlockVariant.FULL
        The residual block variant.

    use_dgge : bool, default True
        True if the depth-guided geometry encoder is fused into the encoders.

    use_depth : bool, default True
        True if the normalized depth is part of the geometry guidance.

    use_normal : bool, default True
        True if the surface normals derived from depth are part of the geometry guidance.

    use_pe : bool, default True
        True if the linear positional encoding is part of the geometry guidance.

    use_light_projector : bool, default False
        True if the blocks are conditioned on a target light given as 9 SH coefficients.

    light_embed_dim : int, default 192
        The length of the light embedding fed to every block.

    projector_hidden : int, default 1024
        The width of the two hidden layers of the light projector.

    use_ilsc : bool, default True
        True if the encoder features are added to the decoder features of the same level.

    use_clsc : bool, default True
        True if the upsampled decoder features of the coarser level are added.

    use_icsc : bool, default True
        True if every level predicts a residual added to its resampled input image.

    image_size : int or None, default None
        An optional expected image size, validated against :attr:`size_multiple`.
    """

    levels: int = Field(default=3, ge=1, le=4)
    blocks_per_level: int = Field(default=4, ge=1, le=6)
    base_channels: int = Field(default=48, ge=1)
    block_variant: BlockVariant = BlockVariant.FULL
    use_dgge: bool = True
    use_depth: bool = True
    use_normal: bool = True
    use_pe: bool = True
    use_light_projector: bool = False
    light_embed_dim: int = Field(default=192, ge=1)
    projector_hidden: int = Field(default=1024, ge=1)
    use_ilsc: bool = True
    use_clsc: bool = True
    use_icsc: bool = True
    image_size: int | None = Field(default=None, ge=1)

    @model_validator(mode='after')
    def validate_architecture(self) -> Self:
        r"""Validate the combination of guidance, light conditioning and image size."""

        if self.use_dgge and self.guidance_channels == 0:
            raise ValueError('use_dgge requires at least one of use_depth, use_normal and use_pe!')

        if self.use_light_projector and not self.block_variant.has_descriptor:
            raise ValueError(
                f'The light projector conditions the descriptors, which block variant '
                f'"{self.block_variant}" does not have!'
            )

        if self.image_size is not None and self.image_size % self.size_multiple:
            raise ValueError(
                f'image_size {self.image_size} is not divisible by {self.size_multiple}!'
            )

        return self

    @property
    def branch_channels(self) -> int:
        return self.base_channels

    @property
    def descriptor_channels(self) -> int:
        r"""The channels of the concatenated dilated branches."""
        return len(self.block_variant.dilations) * self.branch_channels

    @property
    def n_blocks(self) -> int:
        r"""The total number of residual blocks over all levels."""
        return self.levels * self.blocks_per_level

    @property
    def guidance_channels(self) -> int:
        r"""The input channels of the geometry encoder."""
        return 1 * self.use_depth + 3 * self.use_normal + 2 * self.use_pe

    @property
    def size_multiple(self) -> int:
        r"""The number the input height and width must be divisible by."""

        deepest = 2 ** (self.levels - 1 + ENCODER_SCALES - 1)
        if self.use_dgge:
            deepest = max(deepest, 2 ** (DGGE_STAGES - 1))
        return deepest

    def check_input_size(self, height: int, width: int) -> None:
        r"""Validate the spatial size of an input image.

        Raises
        ------
        ianrelight.ShapeError
            If `height` or `width` is not divisible by :attr:`size_multiple`.
        """

        m = self.size_multiple
        if height % m or width % m:
            raise exceptions.ShapeError(
                f'The input size {height}x{width} must be divisible by {m} '
                f'for {self.levels} level(s){" with DGGE" if self.use_dgge else ""}!'
            )


class LossPreset(StrEnum):
    r"""Named weightings of the L1, grayscale SSIM and gradient losses."""

    DEFAULT = 'default'
    GRADIENT = 'gradient'
    GRADIENT_STRONG = 'gradient_strong'


LOSS_PRESETS: dict[LossPreset, tuple[float, float, float]] = {
    LossPreset.DEFAULT: (1.0, 0.5, 0.0),
    LossPreset.GRADIENT: (1.0, 0.0, 0.5),
    LossPreset.GRADIENT_STRONG: (1.0, 0.0, 1.0),
}


class LossWeights(BaseConfigModel):
    r"""The weights of the training loss.

    The loss of level l is ``alpha·L1 + beta·L_SSIM + gamma·L_gradient`` and the total
    loss is the sum of the level losses weighted by the level weights.

    Parameters
    ----------
    preset : ianrelight.config.LossPreset or None, default None
        A named weighting providing `alpha`, `beta` and `gamma`. Explicitly
        specified weights take precedence over the preset.

    alpha : float, default 1.0
        The weight of the L1 loss.

    beta : float, default 0.5
        The weight of the grayscale SSIM loss.

    gamma : float, default 0.0
        The weight of the gradient loss.

    level_weights : tuple[float, ...] or None, default None
        The weight of every level, index 0 being the finest level. If None
        and `level_ratio` is None every level has weight 1.

    level_ratio : float or None, default None
        Weight the finest level ratio^(L-1) times the coarsest, with a geometric
        progression in between. Mutually exclusive with `level_weights`.
    """

    preset: LossPreset | None = None
    alpha: NonNegativeFloat = 1.0
    beta: NonNegativeFloat = 0.5
    gamma: NonNegativeFloat = 0.0
    level_weights: tuple[NonNegativeFloat, ...] | None = None
    level_ratio: PositiveFloat | None = None

    @model_validator(mode='before')
    @classmethod
    def apply_preset(cls, data: Any) -> Any:
        r"""Fill the weights missing from the input from the preset."""

        if not isinstance(data, dict) or data.get('preset') is None:
            return data

        try:
            alpha, beta, gamma = LOSS_PRESETS[LossPreset(data['preset'])]
        except ValueError:
            return data  # The field validation reports the invalid preset.

        return {'alpha': alpha, 'beta': beta, 'gamma': gamma} | data

    @model_validator(mode='after')
    def validate_level_weighting(self) -> Self:
        r"""Validate that at most one way of weighting the levels is given."""

        if self.level_weights is not None and self.level_ratio is not None:
            raise ValueError('Specify at most one of level_weights and level_ratio!')
        return self

    @classmethod
    def from_preset(cls, preset: LossPreset | str) -> Self:
        r"""Create the loss weights of a named preset."""
        return cls(preset=preset)

    def weights_for(self, levels: int) -> tuple[float, ...]:
        r"""The weight of every level, index 0 being the finest.

        Raises
        ------
        ianrelight.ConfigError
            If the number of configured level weights differs from `levels`.
        """

        if self.level_weights is not None:
            if len(self.level_weights) != levels:
                raise exceptions.ConfigError(
                    f'{len(self.level_weights)} level weights configured for {levels} level(s)!'
                )
            return self.level_weights

        if self.level_ratio is not None:
            return tuple(self.level_ratio ** (levels - 1 - lvl) for lvl in range(levels))

        return (1.0,) * levels

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module config.model."""

# ruff: noqa: PLR2004

# Standard library
from typing import Any

# Third party
import pytest

# Local
from ianrelight import exceptions
from ianrelight.config import BlockVariant, IANConfig, LossPreset, LossWeights


class TestBlockVariant:
    r"""Tests for the enum `ianrelight.config.BlockVariant`."""

    @pytest.mark.parametrize(
        ('variant', 'dilations_exp', 'has_descriptor_exp'),
        [
            pytest.param(BlockVariant.FULL, (1, 2, 3), True, id='full'),
            pytest.param(BlockVariant.VANILLA, (), False, id='vanilla'),
            pytest.param(BlockVariant.WO_ATT, (1, 2, 3), False, id='wo_att'),
            pytest.param(BlockVariant.WO_DILATED, (1, 1, 1), True, id='wo_dilated'),
            pytest.param(BlockVariant.MEAN_ATT, (1, 2, 3), True, id='mean_att'),
            pytest.param(BlockVariant.STD_ATT, (1, 2, 3), True, id='std_att'),
        ],
    )
    def test_properties(
        self, variant: BlockVariant, dilations_exp: tuple[int, ...], has_descriptor_exp: bool
    ) -> None:
        r"""Test the dilations and the descriptor product of every variant."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        dilations, has_descriptor = variant.dilations, variant.has_descriptor

        # Verify
        # ===========================================================
        assert dilations == dilations_exp
        assert has_descriptor is has_descriptor_exp

        # Clean up - None
        # ===========================================================


class TestIANConfig:
    r"""Tests for the config model `ianrelight.config.IANConfig`."""

    def test_defaults(self) -> None:
        r"""Test the default architecture."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        config = IANConfig()

        # Verify
        # ===========================================================
        assert (config.levels, config.blocks_per_level, config.base_channels) == (3, 4, 48)
        assert config.guidance_channels == 6
        assert config.descriptor_channels == 144
        assert config.n_blocks == 12
        assert config.size_multiple == 16

        # Clean up - None
        # ===========================================================

    @pytest.mark.parametrize(
        ('kwargs', 'size_multiple_exp'),
        [
            pytest.param({'levels': 1, 'use_dgge': False}, 4, id='L=1'),
            pytest.param({'levels': 1}, 16, id='L=1 with DGGE'),
            pytest.param({'levels': 2, 'use_dgge': False}, 8, id='L=2'),
            pytest.param({'levels': 4}, 32, id='L=4'),
        ],
    )
    def test_size_multiple(self, kwargs: dict[str, Any], size_multiple_exp: int) -> None:
        r"""Test the number the input size must be divisible by."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        config = IANConfig(**kwargs)

        # Verify
        # ===========================================================
        assert config.size_multiple == size_multiple_exp

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_check_input_size(self) -> None:
        r"""Test that an input size not divisible by the size multiple raises ShapeError."""

        # Setup
        # ===========================================================
        config = IANConfig()
        config.check_input_size(32, 48)

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ShapeError) as exc_info:
            config.check_input_size(24, 32)

        # Verify
        # ===========================================================
        assert (
            'The input size 24x32 must be divisible by 16 for 3 level(s) with DGGE!'
            in exc_info.exconly()
        )

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    @pytest.mark.parametrize(
        ('kwargs', 'error_msg_exp'),
        [
            pytest.param({'levels': 5}, 'levels', id='levels'),
            pytest.param({'blocks_per_level': 7}, 'blocks_per_level', id='blocks'),
            pytest.param(
                {'use_depth': False, 'use_normal': False, 'use_pe': False},
                'use_dgge requires at least one of use_depth, use_normal and use_pe!',
                id='empty guidance',
            ),
            pytest.param(
                {'use_light_projector': True, 'block_variant': 'wo_att'},
                'which block variant "wo_att" does not have!',
                id='projector without descriptors',
            ),
            pytest.param(
                {'image_size': 40}, 'image_size 40 is not divisible by 16!', id='image size'
            ),
        ],
    )
    def test_invalid(self, kwargs: dict[str, Any], error_msg_exp: str) -> None:
        r"""Test that invalid architectures raise ConfigError."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ConfigError) as exc_info:
            IANConfig(**kwargs)

        # Verify
        # ===========================================================
        assert error_msg_exp in exc_info.exconly()

        # Clean up - None
        # ===========================================================


class TestLossWeights:
    r"""Tests for the config model `ianrelight.config.LossWeights`."""

    @pytest.mark.parametrize(
        ('preset', 'weights_exp'),
        [
            pytest.param(LossPreset.DEFAULT, (1.0, 0.5, 0.0), id='default'),
            pytest.param('gradient', (1.0, 0.0, 0.5), id='gradient'),
            pytest.param(LossPreset.GRADIENT_STRONG, (1.0, 0.0, 1.0), id='gradient_strong'),
        ],
    )
    def test_from_preset(
        self, preset: LossPreset | str, weights_exp: tuple[float, float, float]
    ) -> None:
        r"""Test the weights of the presets."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        w = LossWeights.from_preset(preset)

        # Verify
        # ===========================================================
        assert (w.alpha, w.beta, w.gamma) == weights_exp

        # Clean up - None
        # ===========================================================

    def test_explicit_weight_overrides_preset(self) -> None:
        r"""Test that an explicitly given weight takes precedence over the preset."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        w = LossWeights(preset='gradient', gamma=2.0)

        # Verify
        # ===========================================================
        assert (w.alpha, w.beta, w.gamma) == (1.0, 0.0, 2.0)

        # Clean up - None
        # ===========================================================

    @pytest.mark.parametrize(
        ('kwargs', 'weights_exp'),
        [
            pytest.param({}, (1.0, 1.0, 1.0), id='uniform'),
            pytest.param({'level_ratio': 2.0}, (4.0, 2.0, 1.0), id='ratio'),
            pytest.param({'level_weights': (1.0, 0.5, 0.25)}, (1.0, 0.5, 0.25), id='explicit'),
        ],
    )
    def test_weights_for(self, kwargs: dict[str, Any], weights_exp: tuple[float, ...]) -> None:
        r"""Test the level weights with the finest level first."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        result = LossWeights(**kwargs).weights_for(3)

        # Verify
        # ===========================================================
        assert result == pytest.approx(weights_exp)

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_level_weights_and_ratio(self) -> None:
        r"""Test that level weights and a level ratio are mutually exclusive."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ConfigError) as exc_info:
            LossWeights(level_weights=(1.0, 1.0), level_ratio=2.0)

        # Verify
        # ===========================================================
        assert 'Specify at most one of level_weights and level_ratio!' in exc_info.exconly()

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_invalid_preset(self) -> None:
        r"""Test that an unknown preset raises ConfigError."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ConfigError) as exc_info:
            LossWeights(preset='perceptual')

        # Verify
        # ===========================================================
        assert 'preset' in exc_info.exconly()

        # Clean up - None
        # ===========================================================

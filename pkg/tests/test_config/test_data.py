# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module config.data."""

# ruff: noqa: PLR2004

# Standard library
from typing import Any

# Third party
import pytest

# Local
from ianrelight import exceptions
from ianrelight.config import DatasetSpec, LightPolicy, LightSetting


class TestDatasetSpec:
    r"""Tests for the config model `ianrelight.config.DatasetSpec`."""

    def test_defaults(self) -> None:
        r"""Test the default dataset of fixed north to east relighting."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        spec = DatasetSpec()

        # Verify
        # ===========================================================
        assert (spec.count, spec.size, spec.seed) == (200, 64, 7)
        assert spec.policy == LightPolicy.FIXED
        assert spec.input_light == LightSetting(azimuth=0, elevation=45, temperature=4500)
        assert spec.target_light == LightSetting(azimuth=90, elevation=45)

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    @pytest.mark.parametrize(
        ('kwargs', 'error_msg_exp'),
        [
            pytest.param({'size': 8}, 'size', id='size'),
            pytest.param(
                {'min_spheres': 3, 'max_spheres': 2},
                'min_spheres (3) must not exceed max_spheres (2)!',
                id='spheres',
            ),
            pytest.param(
                {'max_radius': 0.5}, 'max_radius (0.5) must be below 0.5', id='radius'
            ),
            pytest.param({'policy': 'sequential'}, 'policy', id='policy'),
        ],
    )
    def test_invalid(self, kwargs: dict[str, Any], error_msg_exp: str) -> None:
        r"""Test that an invalid dataset specification raises ConfigError."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ConfigError) as exc_info:
            DatasetSpec(**kwargs)

        # Verify
        # ===========================================================
        assert error_msg_exp in exc_info.exconly()

        # Clean up - None
        # ===========================================================


class TestLightSetting:
    r"""Tests for the config model `ianrelight.config.LightSetting`."""

    @pytest.mark.raises
    @pytest.mark.parametrize(
        ('kwargs', 'field'),
        [
            pytest.param({'azimuth': 360, 'elevation': 45}, 'azimuth', id='azimuth'),
            pytest.param({'azimuth': 0, 'elevation': 91}, 'elevation', id='elevation'),
            pytest.param(
                {'azimuth': 0, 'elevation': 45, 'temperature': 2000},
                'temperature',
                id='temperature',
            ),
        ],
    )
    def test_out_of_range(self, kwargs: dict[str, Any], field: str) -> None:
        r"""Test that angles and temperatures out of range raise ConfigError."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ConfigError) as exc_info:
            LightSetting(**kwargs)

        # Verify
        # ===========================================================
        assert field in exc_info.exconly()

        # Clean up - None
        # ===========================================================

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module metrics."""

# ruff: noqa: PLR2004

# Standard library
import math

# Third party
import numpy as np
import pytest

# Local
from ianrelight import exceptions
from ianrelight.metrics import psnr, ssim_luma, ssim_rgb


class TestPSNR:
    r"""Tests for the function `ianrelight.metrics.psnr`."""

    @pytest.mark.parametrize(
        ('a', 'b', 'exp'),
        [
            pytest.param(0.5, 0.6, 20.0, id='0.1 apart'),
            pytest.param(0.0, 0.01, 40.0, id='0.01 apart'),
            pytest.param(0.3, 0.3, math.inf, id='identical'),
            pytest.param(1.4, 1.0, math.inf, id='clamped'),
        ],
    )
    def test_constant_images(self, a: float, b: float, exp: float) -> None:
        r"""Test the PSNR of constant images."""

        # Setup
        # ===========================================================
        out = np.full((3, 8, 8), a)
        gt = np.full((3, 8, 8), b)

        # Exercise
        # ===========================================================
        result = psnr(out, gt)

        # Verify
        # ===========================================================
        assert result == pytest.approx(exp)

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_shape_mismatch(self) -> None:
        r"""Test that inputs of different shapes raise ShapeError."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ShapeError) as exc_info:
            psnr(np.zeros((3, 8, 8)), np.zeros((3, 8, 4)))

        # Verify
        # ===========================================================
        assert 'Metric inputs differ in shape: (3, 8, 8) != (3, 8, 4)!' in exc_info.exconly()

        # Clean up - None
        # ===========================================================


class TestSSIMMetrics:
    r"""Tests for the functions `ssim_rgb` and `ssim_luma`."""

    def test_identical_images(self, rng: np.random.Generator) -> None:
        r"""Test that an image is perfectly similar to itself."""

        # Setup
        # ===========================================================
        img = rng.uniform(size=(2, 3, 16, 16)).astype(np.float32)

        # Exercise
        # ===========================================================
        rgb = ssim_rgb(img, img)
        luma = ssim_luma(img[0], img[0])

        # Verify
        # ===========================================================
        assert rgb == pytest.approx(1.0)
        assert luma == pytest.approx(1.0)

        # Clean up - None
        # ===========================================================

    def test_luma_ignores_chroma_preserving_changes(self, rng: np.random.Generator) -> None:
        r"""Test that a change of colour that keeps the luma only lowers the RGB SSIM."""

        # Setup
        # ===========================================================
        img = rng.uniform(0.3, 0.7, size=(3, 16, 16))
        shifted = img.copy()
        shifted[0] += 0.1 * 0.587
        shifted[1] -= 0.1 * 0.299

        # Exercise
        # ===========================================================
        rgb = ssim_rgb(img, shifted)
        luma = ssim_luma(img, shifted)

        # Verify
        # ===========================================================
        assert luma == pytest.approx(1.0)
        assert rgb < luma

        # Clean up - None
        # ===========================================================

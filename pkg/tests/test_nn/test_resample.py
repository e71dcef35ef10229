# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module nn.resample."""

# ruff: noqa: PLR2004

# Standard library
from fractions import Fraction

# Third party
import numpy as np
import pytest

# Local
from ianrelight import exceptions
from ianrelight.nn import (
    bicubic_matrix,
    bilinear_matrix,
    gaussian_window_matrix,
    resize_bicubic,
    upsample_bilinear2x,
)
from ianrelight.tensor import Tensor, check_gradients

# =================================================================================================
# Tests
# =================================================================================================


class TestInterpolationMatrices:
    r"""Tests for the functions building the resampling matrices."""

    @pytest.mark.parametrize('size', [1, 4, 9])
    def test_bilinear_rows_sum_to_one(self, size: int) -> None:
        r"""Test the shape of the bilinear matrix and that every row is a convex combination."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        matrix = bilinear_matrix(size)

        # Verify
        # ===========================================================
        assert matrix.shape == (2 * size, size)
        np.testing.assert_allclose(matrix.sum(axis=1), 1.0)
        assert np.all(matrix >= 0)

        # Clean up - None
        # ===========================================================

    def test_bilinear_pixel_center_weights(self) -> None:
        r"""Test the weights of the interior and the clamped border rows."""

        # Setup
        # ===========================================================
        exp = np.array(
            [
                [1.0, 0.0, 0.0],
                [0.75, 0.25, 0.0],
                [0.25, 0.75, 0.0],
                [0.0, 0.75, 0.25],
                [0.0, 0.25, 0.75],
                [0.0, 0.0, 1.0],
            ]
        )

        # Exercise
        # ===========================================================
        matrix = bilinear_matrix(3)

        # Verify
        # ===========================================================
        np.testing.assert_allclose(matrix, exp)

        # Clean up - None
        # ===========================================================

    @pytest.mark.parametrize(
        ('size_in', 'size_out'),
        [
            pytest.param(8, 16, id='up 2'),
            pytest.param(16, 8, id='down 2'),
            pytest.param(32, 4, id='down 8'),
        ],
    )
    def test_bicubic_rows_sum_to_one(self, size_in: int, size_out: int) -> None:
        r"""Test the shape and the normalization of the bicubic matrix."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        matrix = bicubic_matrix(size_in, size_out)

        # Verify
        # ===========================================================
        assert matrix.shape == (size_out, size_in)
        np.testing.assert_allclose(matrix.sum(axis=1), 1.0)

        # Clean up - None
        # ===========================================================

    @pytest.mark.parametrize(
        ('size_in', 'size_out', 'taps_exp'),
        [
            pytest.param(8, 16, 4, id='upscale'),
            pytest.param(16, 8, 8, id='downscale antialiased'),
            pytest.param(32, 8, 16, id='downscale by 4 antialiased'),
        ],
    )
    def test_bicubic_support(self, size_in: int, size_out: int, taps_exp: int) -> None:
        r"""Test that downscaling widens the cubic kernel by the inverse scale."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        row = bicubic_matrix(size_in, size_out)[size_out // 2]

        # Verify
        # ===========================================================
        assert np.count_nonzero(row) == taps_exp

        # Clean up - None
        # ===========================================================

    def test_gaussian_window_is_a_valid_filter(self) -> None:
        r"""Test that the Gaussian window matrix filters without padding."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        matrix = gaussian_window_matrix(16, window=11, sigma=1.5)

        # Verify
        # ===========================================================
        assert matrix.shape == (6, 16)
        np.testing.assert_allclose(matrix.sum(axis=1), 1.0)
        np.testing.assert_allclose(matrix[0, :11], matrix[0, :11][::-1])

        # Clean up - None
        # ===========================================================

    def test_matrices_are_read_only(self) -> None:
        r"""Test that the cached matrices cannot be modified."""

        # Setup
        # ===========================================================
        matrix = bicubic_matrix(8, 4)

        # Exercise
        # ===========================================================
        with pytest.raises(ValueError):
            matrix[0, 0] = 2.0

        # Verify
        # ===========================================================
        assert bicubic_matrix(8, 4)[0, 0] != 2.0

        # Clean up - None
        # ===========================================================


class TestResizeBicubic:
    r"""Tests for the function `ianrelight.nn.resize_bicubic`."""

    @pytest.mark.parametrize(
        ('factor', 'size_exp'),
        [
            pytest.param(0.5, 16, id='1/2'),
            pytest.param(Fraction(1, 4), 8, id='1/4'),
            pytest.param(0.125, 4, id='1/8'),
            pytest.param(2, 64, id='2'),
        ],
    )
    def test_supported_factors(self, factor: float, size_exp: int) -> None:
        r"""Test the output size of every supported factor."""

        # Setup
        # ===========================================================
        x = Tensor(np.zeros((1, 3, 32, 32), dtype=np.float32))

        # Exercise
        # ===========================================================
        out = resize_bicubic(x, factor)

        # Verify
        # ===========================================================
        assert out.shape == (1, 3, size_exp, size_exp)
        assert out.dtype == np.float32

        # Clean up - None
        # ===========================================================

    def test_constant_image_is_preserved(self) -> None:
        r"""Test that a downscale followed by an upscale leaves a constant image unchanged."""

        # Setup
        # ===========================================================
        x = Tensor(np.full((2, 3, 16, 24), 0.37))

        # Exercise
        # ===========================================================
        out = resize_bicubic(resize_bicubic(x, 0.5), 2)

        # Verify
        # ===========================================================
        assert out.shape == x.shape
        np.testing.assert_allclose(out.data, 0.37, atol=1e-12)

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    @pytest.mark.parametrize(
        ('shape', 'factor', 'error_msg_exp'),
        [
            pytest.param((1, 1, 16, 16), 3, 'Unsupported resize factor 3!', id='factor'),
            pytest.param(
                (1, 1, 12, 16),
                0.125,
                'Spatial size 12x16 is not divisible by 8 for a downscale by 1/8!',
                id='not divisible',
            ),
            pytest.param(
                (16, 16), 2, 'resize_bicubic expects [N, C, H, W], got (16, 16)!', id='rank'
            ),
        ],
    )
    def test_invalid_input(self, shape: tuple[int, ...], factor: float, error_msg_exp: str) -> None:
        r"""Test that an unsupported factor or size raises ShapeError."""

        # Setup
        # ===========================================================
        x = Tensor(np.zeros(shape))

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ShapeError) as exc_info:
            resize_bicubic(x, factor)

        # Verify
        # ===========================================================
        assert error_msg_exp in exc_info.exconly()

        # Clean up - None
        # ===========================================================

    @pytest.mark.parametrize('factor', [0.5, 2])
    def test_gradients(self, factor: float, rng: np.random.Generator) -> None:
        r"""Test the gradient of the resize with finite differences."""

        # Setup
        # ===========================================================
        size_out = int(8 * factor)
        r = Tensor(rng.standard_normal((1, 2, size_out, size_out)))

        # Exercise
        # ===========================================================
        result = check_gradients(
            lambda x: (resize_bicubic(x, factor) * r).sum(), [rng.standard_normal((1, 2, 8, 8))]
        )

        # Verify
        # ===========================================================
        assert result.passed, f'max relative error {result.max_rel_error}'

        # Clean up - None
        # ===========================================================


class TestUpsampleBilinear2x:
    r"""Tests for the function `ianrelight.nn.upsample_bilinear2x`."""

    def test_doubles_size(self, rng: np.random.Generator) -> None:
        r"""Test that the spatial size is doubled and the mean of a ramp is kept."""

        # Setup
        # ===========================================================
        x = Tensor(np.tile(np.arange(5.0), (1, 1, 3, 1)))

        # Exercise
        # ===========================================================
        out = upsample_bilinear2x(x)

        # Verify
        # ===========================================================
        assert out.shape == (1, 1, 6, 10)
        np.testing.assert_allclose(out.data.mean(), x.data.mean())

        # Clean up - None
        # ===========================================================

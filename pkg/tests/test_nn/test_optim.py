# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the modules nn.init and nn.optim."""

# ruff: noqa: PLR2004

# Standard library
import math

# Third party
import numpy as np
import pytest

# Local
from ianrelight import exceptions
from ianrelight.nn import Adam, AdamState, adam_step, fan_in_and_out, xavier_init, zeros
from ianrelight.tensor import Tensor

# =================================================================================================
# Tests
# =================================================================================================


class TestFanInAndOut:
    r"""Tests for the function `ianrelight.nn.fan_in_and_out`."""

    @pytest.mark.parametrize(
        ('shape', 'exp'),
        [
            pytest.param((7,), (7, 7), id='vector'),
            pytest.param((4, 6), (6, 4), id='linear'),
            pytest.param((8, 3, 3, 3), (27, 72), id='conv'),
        ],
    )
    def test_shapes(self, shape: tuple[int, ...], exp: tuple[int, int]) -> None:
        r"""Test the fan-in and fan-out of vectors, linear weights and kernels."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        result = fan_in_and_out(shape)

        # Verify
        # ===========================================================
        assert result == exp

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_empty_shape(self) -> None:
        r"""Test that an empty shape raises ShapeError."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ShapeError) as exc_info:
            fan_in_and_out(())

        # Verify
        # ===========================================================
        assert 'Cannot derive fan-in and fan-out from an empty shape!' in exc_info.exconly()

        # Clean up - None
        # ===========================================================


class TestXavierInit:
    r"""Tests for the function `ianrelight.nn.xavier_init`."""

    def test_bounds_and_determinism(self) -> None:
        r"""Test that the values are within the Xavier bound and reproducible from the seed."""

        # Setup
        # ===========================================================
        shape = (16, 8, 3, 3)
        bound = math.sqrt(6 / (8 * 9 + 16 * 9))

        # Exercise
        # ===========================================================
        w1 = xavier_init(shape, rng_seed=3, name='w')
        w2 = xavier_init(shape, rng_seed=3)

        # Verify
        # ===========================================================
        assert w1.shape == shape
        assert w1.requires_grad
        assert w1.name == 'w'
        assert w1.dtype == np.float32
        assert np.abs(w1.data).max() <= bound
        np.testing.assert_array_equal(w1.data, w2.data)

        # Clean up - None
        # ===========================================================

    def test_zeros(self) -> None:
        r"""Test a zero-initialized bias."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        b = zeros((5,), name='b')

        # Verify
        # ===========================================================
        np.testing.assert_array_equal(b.data, np.zeros(5))
        assert b.requires_grad

        # Clean up - None
        # ===========================================================


class TestAdam:
    r"""Tests for the Adam optimizer."""

    def test_zero_gradient_is_a_fixed_point(self) -> None:
        r"""Test that a zero gradient leaves the parameters unchanged but counts the step."""

        # Setup
        # ===========================================================
        p = Tensor(np.array([1.0, -2.0, 3.0]), requires_grad=True)
        state = AdamState(lr=0.1)

        # Exercise
        # ===========================================================
        adam_step({'p': p}, {'p': np.zeros(3)}, state)

        # Verify
        # ===========================================================
        np.testing.assert_array_equal(p.data, [1.0, -2.0, 3.0])
        assert state.step == 1

        # Clean up - None
        # ===========================================================

    def test_first_step_moves_by_lr(self) -> None:
        r"""Test that the bias-corrected first step moves every element by the learning rate."""

        # Setup
        # ===========================================================
        p = Tensor(np.array([1.0, 1.0]), requires_grad=True)
        state = AdamState(lr=0.01, eps=0.0)

        # Exercise
        # ===========================================================
        adam_step({'p': p}, {'p': np.array([0.5, -4.0])}, state)

        # Verify
        # ===========================================================
        np.testing.assert_allclose(p.data, [0.99, 1.01])
        np.testing.assert_allclose(state.m['p'], [0.05, -0.4])

        # Clean up - None
        # ===========================================================

    def test_minimizes_a_quadratic(self) -> None:
        r"""Test that the optimizer drives a quadratic towards its minimum."""

        # Setup
        # ===========================================================
        p = Tensor(np.array([2.0, -3.0]), requires_grad=True)
        optimizer = Adam({'p': p}, lr=0.1)

        # Exercise
        # ===========================================================
        for _ in range(300):
            optimizer.zero_grad()
            (p * p).sum().backward()
            optimizer.step()

        # Verify
        # ===========================================================
        assert np.abs(p.data).max() < 0.5
        assert optimizer.state.step == 300

        # Clean up - None
        # ===========================================================

    def test_skips_parameters_without_gradient(self) -> None:
        r"""Test that a parameter without a gradient is not updated and gets no moments."""

        # Setup
        # ===========================================================
        p = Tensor(np.array([1.0]), requires_grad=True)
        q = Tensor(np.array([5.0]), requires_grad=True)
        q.grad = np.array([1.0])
        optimizer = Adam({'p': p, 'q': q}, lr=0.5)

        # Exercise
        # ===========================================================
        optimizer.step()

        # Verify
        # ===========================================================
        np.testing.assert_array_equal(p.data, [1.0])
        assert 'p' not in optimizer.state.m
        np.testing.assert_allclose(q.data, [4.5])

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_gradient_shape_mismatch(self) -> None:
        r"""Test that a gradient with the wrong shape raises ShapeError."""

        # Setup
        # ===========================================================
        p = Tensor(np.ones((2, 2)), requires_grad=True)

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.ShapeError) as exc_info:
            adam_step({'w': p}, {'w': np.ones(4)}, AdamState())

        # Verify
        # ===========================================================
        assert 'Gradient of "w" has shape (4,), expected (2, 2)!' in exc_info.exconly()

        # Clean up - None
        # ===========================================================

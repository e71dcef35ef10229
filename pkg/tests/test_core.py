# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module core."""

# Third party
import pytest

# Local
from ianrelight.core import OperationResult, has_required_keys

# =============================================================================================
# Tests
# =============================================================================================


def test_operation_result_defaults() -> None:
    r"""Test the default values of `OperationResult`."""

    # Setup - None
    # ===========================================================

    # Exercise
    # ===========================================================
    result = OperationResult()

    # Verify
    # ===========================================================
    assert result == (True, '', '', None)

    # Clean up - None
    # ===========================================================


class TestHasRequiredKeys:
    r"""Tests for the function `ianrelight.core.has_required_keys`."""

    @pytest.mark.parametrize(
        'keys',
        [
            pytest.param(['param/a', 'param/b'], id='list'),
            pytest.param(('param/b', 'param/a'), id='tuple in other order'),
            pytest.param({'param/a': 1, 'param/b': 2}, id='dict'),
        ],
    )
    def test_has_required_keys(self, keys: list[str] | tuple[str, ...] | dict[str, int]) -> None:
        r"""Test keys matching the required keys."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        result = has_required_keys(keys=keys, required_keys=['param/a', 'param/b'])

        # Verify
        # ===========================================================
        assert result == OperationResult(ok=True)

        # Clean up - None
        # ===========================================================

    def test_missing_keys(self) -> None:
        r"""Test keys lacking some of the required keys."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        result = has_required_keys(keys=['a'], required_keys=['a', 'b', 'c'])

        # Verify
        # ===========================================================
        assert result.ok is False
        assert result.code == 'missing'
        assert result.short_msg == 'Missing 2 required key(s)!'
        assert "Missing required keys : ('b', 'c')" in result.long_msg

        # Clean up - None
        # ===========================================================

    def test_unexpected_keys(self) -> None:
        r"""Test keys with keys that are not required."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        result = has_required_keys(keys=['a', 'b', 'x'], required_keys=['a', 'b'])

        # Verify
        # ===========================================================
        assert result.ok is False
        assert result.code == 'unexpected'
        assert result.short_msg == 'Found 1 unexpected key(s)!'
        assert "Unexpected keys : ('x',)" in result.long_msg

        # Clean up - None
        # ===========================================================

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module `cli.main`."""

# Standard library
from pathlib import Path

# Third party
import pytest
from click.testing import CliRunner

# Local
from ianrelight.cli.main import main
from ianrelight.metadata import __version__


class TestMain:
    r"""Tests for the entry point `ianrelight.cli.main.main`."""

    def test_version(self) -> None:
        r"""Test the option --version."""

        # Setup
        # ===========================================================
        runner = CliRunner()

        # Exercise
        # ===========================================================
        result = runner.invoke(cli=main, args=['--version'], catch_exceptions=False)

        # Verify
        # ===========================================================
        assert result.exit_code == 0, 'Exit code is not 0!'
        assert f'version: {__version__}' in result.output

        # Clean up - None
        # ===========================================================

    @pytest.mark.usefixtures(
        'remove_config_file_env_var', 'default_config_file_location_does_not_exist'
    )
    def test_info_from_config_file(self, config_file: tuple[Path, str, dict]) -> None:
        r"""Test that the configuration is loaded from the file given to --config."""

        # Setup
        # ===========================================================
        config_file_path, _, _ = config_file
        runner = CliRunner()

        # Exercise
        # ===========================================================
        result = runner.invoke(
            cli=main, args=['--config', str(config_file_path), 'info'], catch_exceptions=False
        )

        # Verify
        # ===========================================================
        print(result.output)

        assert result.exit_code == 0, 'Exit code is not 0!'
        assert f'Resolved configuration ({config_file_path}):' in result.output
        assert '"base_channels": 8' in result.output
        assert 'at 32x32' in result.output

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_config_file_with_syntax_error(self, config_file_with_syntax_error: Path) -> None:
        r"""Test that a config file with syntax errors exits with code 1."""

        # Setup
        # ===========================================================
        runner = CliRunner()

        # Exercise
        # ===========================================================
        result = runner.invoke(
            cli=main,
            args=['--config', str(config_file_with_syntax_error), 'info'],
            catch_exceptions=False,
        )

        # Verify
        # ===========================================================
        print(result.output)

        assert result.exit_code == 1, 'Exit code is not 1!'
        assert 'Error loading configuration!' in result.output

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_empty_stdin(self) -> None:
        r"""Test that reading the configuration from an empty stdin exits with code 1."""

        # Setup
        # ===========================================================
        runner = CliRunner()

        # Exercise
        # ===========================================================
        result = runner.invoke(
            cli=main, args=['--config', '-', 'info'], input='', catch_exceptions=False
        )

        # Verify
        # ===========================================================
        assert result.exit_code == 1, 'Exit code is not 1!'
        assert 'No configuration found on stdin!' in result.output

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    @pytest.mark.usefixtures(
        'remove_config_file_env_var', 'default_config_file_location_does_not_exist'
    )
    @pytest.mark.parametrize(
        'args',
        [
            pytest.param(['--config', 'missing.toml', 'info'], id='missing config file'),
            pytest.param(['relight'], id='unknown command'),
            pytest.param(['info', '--size', '0'], id='invalid option'),
            pytest.param(['gen-data'], id='missing required option'),
        ],
    )
    def test_usage_error(self, args: list[str]) -> None:
        r"""Test that invalid usage exits with code 2."""

        # Setup
        # ===========================================================
        runner = CliRunner()

        # Exercise
        # ===========================================================
        result = runner.invoke(cli=main, args=args, catch_exceptions=False)

        # Verify
        # ===========================================================
        assert result.exit_code == 2, 'Exit code is not 2!'

        # Clean up - None
        # ===========================================================

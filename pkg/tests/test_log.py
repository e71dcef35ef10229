# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module log."""

# ruff: noqa: PLR2004

# Standard library
import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path

# Third party
import pytest

# Local
from ianrelight import exceptions
from ianrelight.config import LoggingConfig, LogHandlerType, LogLevel, Stream
from ianrelight.log import DEFAULT_HANDLER_NAME, add_handlers, create_stream_handler, setup_logging

# =================================================================================================
# Fixtures
# =================================================================================================


@pytest.fixture
def logging_stdout_and_2_log_files(tmp_path: Path) -> LoggingConfig:
    r"""A logging configuration logging to stdout and 2 log files.

    The file handler named "debug" is disabled.
    """

    return LoggingConfig.model_validate(
        {
            'min_log_level': LogLevel.DEBUG,
            'format': r'%(levelname)s - %(message)s',
            'stream': {'stdout': {'stream': Stream.STDOUT, 'min_log_level': LogLevel.ERROR}},
            'file': {
                'train': {
                    'path': tmp_path / 'train.log',
                    'min_log_level': LogLevel.INFO,
                    'format': r'%(name)s|%(levelname)s|%(message)s',
                },
                'debug': {
                    'disabled': True,
                    'path': tmp_path / 'debug.log',
                    'min_log_level': LogLevel.DEBUG,
                },
            },
        }
    )


def write_log_messages(logger: logging.Logger) -> None:
    r"""Write a message of every log level."""

    messages = (
        (logging.DEBUG, 'A debug message.'),
        (logging.INFO, 'An info message.'),
        (logging.WARNING, 'A warning message.'),
        (logging.ERROR, 'An error message.'),
    )
    for level, msg in messages:
        logger.log(level=level, msg=msg)


# =================================================================================================
# Tests
# =================================================================================================


class TestSetupLogging:
    r"""Tests for the function `setup_logging`."""

    def test_logging_disabled(self, caplog: pytest.LogCaptureFixture) -> None:
        r"""Test to disable logging completely."""

        # Setup
        # ===========================================================
        logger = setup_logging(config=LoggingConfig(disabled=True))

        # Exercise
        # ===========================================================
        write_log_messages(logger=logger)

        # Verify
        # ===========================================================
        assert len(caplog.record_tuples) == 0

        # Clean up - None
        # ===========================================================

    def test_default_stderr_handler(self, capsys: pytest.CaptureFixture) -> None:
        r"""Test that a stderr handler is added if no handlers are configured."""

        # Setup
        # ===========================================================
        logger = logging.getLogger()
        nr_handlers_before = len(logger.handlers)

        # Exercise
        # ===========================================================
        setup_logging(config=LoggingConfig(), logger=logger)
        write_log_messages(logger=logging.getLogger('ianrelight.train'))

        # Verify
        # ===========================================================
        handler = logger.handlers[-1]
        assert len(logger.handlers) == nr_handlers_before + 1
        assert handler.get_name() == DEFAULT_HANDLER_NAME

        captured = capsys.readouterr()
        assert captured.out == ''
        assert '|ianrelight.train|INFO|An info message.' in captured.err
        assert 'A debug message.' not in captured.err

        # Clean up - None
        # ===========================================================

    def test_stdout_and_log_files(
        self, capsys: pytest.CaptureFixture, logging_stdout_and_2_log_files: LoggingConfig
    ) -> None:
        r"""Test the levels and formats of a stream handler and a file handler."""

        # Setup
        # ===========================================================
        file_config = logging_stdout_and_2_log_files.file
        assert file_config is not None, 'log file configuration not found!'

        # Exercise
        # ===========================================================
        setup_logging(config=logging_stdout_and_2_log_files, logger=logging.getLogger())
        write_log_messages(logger=logging.getLogger('ianrelight.data'))

        for handler in logging.getLogger().handlers:
            handler.flush()

        # Verify
        # ===========================================================
        captured = capsys.readouterr()
        assert captured.out == 'ERROR - An error message.\n'

        train_log = file_config['train'].path.read_text(encoding='utf-8').splitlines()
        assert train_log == [
            'ianrelight.data|INFO|An info message.',
            'ianrelight.data|WARNING|A warning message.',
            'ianrelight.data|ERROR|An error message.',
        ]
        assert not file_config['debug'].path.exists()

        # Clean up - None
        # ===========================================================
        for handler in logging.getLogger().handlers:
            if isinstance(handler, RotatingFileHandler):
                handler.close()

    def test_exclude_handlers(self, logging_stdout_and_2_log_files: LoggingConfig) -> None:
        r"""Test to exclude handlers from being added to the logger."""

        # Setup
        # ===========================================================
        logger = logging.getLogger('ianrelight.test_exclude')
        exclude = {LogHandlerType.FILE: ['train']}

        # Exercise
        # ===========================================================
        setup_logging(config=logging_stdout_and_2_log_files, logger=logger, exclude=exclude)

        # Verify
        # ===========================================================
        assert [h.get_name() for h in logger.handlers] == ['stdout']
        assert logger.level == logging.DEBUG

        # Clean up
        # ===========================================================
        logger.handlers.clear()


class TestAddHandlers:
    r"""Tests for the function `add_handlers`."""

    def test_no_config(self) -> None:
        r"""Test that no handlers are added without a configuration."""

        # Setup
        # ===========================================================
        logger = logging.getLogger('ianrelight.test_no_config')

        # Exercise
        # ===========================================================
        added = add_handlers(
            logger=logger,
            handler_type=LogHandlerType.STREAM,
            config=None,
            exclude=None,
            default_format=None,
            default_datetime_format='%Y',
        )

        # Verify
        # ===========================================================
        assert added == 0
        assert logger.handlers == []

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_invalid_log_handler_type(self) -> None:
        r"""Test to supply a handler type without a create function."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.IANRelightError) as exc_info:
            add_handlers(
                logger=logging.getLogger(),
                handler_type='email',  # type: ignore[arg-type]
                config={},
                exclude=None,
                default_format=None,
                default_datetime_format='%Y',
            )

        # Verify
        # ===========================================================
        assert 'LogHandlerType "email" has no create log handler function!' in exc_info.exconly()

        # Clean up - None
        # ===========================================================


class TestCreateStreamHandler:
    r"""Tests for the function `create_stream_handler`."""

    @pytest.mark.raises
    def test_invalid_stream(self) -> None:
        r"""Test that only stdout and stderr are accepted."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.IANRelightError) as exc_info:
            create_stream_handler(stream='stdin')  # type: ignore[arg-type]

        # Verify
        # ===========================================================
        assert "stream='stdin' is not a valid option!" in exc_info.exconly()

        # Clean up - None
        # ===========================================================

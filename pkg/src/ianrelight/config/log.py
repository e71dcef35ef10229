# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The logging configuration of IANRelight."""

# Standard library
from enum import StrEnum
from pathlib import Path
from typing import Annotated
from uuid import uuid4

# Third party
from pydantic import AfterValidator, Field, ValidationInfo, field_validator

# Local
from ianrelight.config.core import PROG_NAME, BaseConfigModel

LOGGING_DEFAULT_DIR = Path.home() / 'logs' / PROG_NAME

LOGGING_DEFAULT_FILENAME = f'{PROG_NAME}.log'

LOGGING_DEFAULT_FILE_PATH = LOGGING_DEFAULT_DIR / LOGGING_DEFAULT_FILENAME

LOGGING_DEFAULT_FORMAT = r'%(asctime)s|%(name)s|%(levelname)s|%(message)s'

LOGGING_DEFAULT_FORMAT_DEBUG = (
    r'%(asctime)s|%(name)s|%(levelname)s|%(funcName)s|Line:%(lineno)s|%(message)s'
)

LOGGING_DEFAULT_DATETIME_FORMAT = r'%Y-%m-%dT%H:%M:%S'


class LogLevel(StrEnum):
    r"""The available log levels."""

    NOTSET = 'NOTSET'
    DEBUG = 'DEBUG'
    INFO = 'INFO'
    WARNING = 'WARNING'
    ERROR = 'ERROR'
    CRITICAL = 'CRITICAL'


class Stream(StrEnum):
    r"""The output streams a stream handler can write to."""

    STDOUT = 'stdout'
    STDERR = 'stderr'


class LogHandlerType(StrEnum):
    r"""The available types of log handlers."""

    STREAM = 'stream'
    FILE = 'file'


def set_format_based_on_log_level(_format: str | None, info: ValidationInfo) -> str:
    r"""Use the verbose default format for the DEBUG level unless a format is given."""

    if _format is not None:
        return _format

    if info.data.get('min_log_level') == LogLevel.DEBUG:
        return LOGGING_DEFAULT_FORMAT_DEBUG

    return LOGGING_DEFAULT_FORMAT


LogFormatBasedOnLogLevel = Annotated[str | None, AfterValidator(set_format_based_on_log_level)]


class LogHandler(BaseConfigModel):
    r"""The settings shared by all log handlers.

    Parameters
    ----------
    disabled : bool, default False
        True if the handler should not be added.

    min_log_level : ianrelight.config.LogLevel, default ianrelight.config.LogLevel.INFO
        The minimum level of the messages sent to the handler.

    format : str or None, default None
        The :mod:`logging` format string of a message. If None the default format
        of the level is used.

    datetime_format : str, default ianrelight.config.LOGGING_DEFAULT_DATETIME_FORMAT
        The :func:`time.strftime` format of the timestamp.
    """

    disabled: bool = False
    min_log_level: LogLevel = LogLevel.INFO
    format: LogFormatBasedOnLogLevel = Field(default=None, validate_default=True)
    datetime_format: str = LOGGING_DEFAULT_DATETIME_FORMAT


class StreamLogHandler(LogHandler):
    r"""Log messages to stdout or stderr.

    Parameters
    ----------
    stream : ianrelight.config.Stream, default ianrelight.config.Stream.STDERR
        The output stream. stderr keeps the log separate from the
        tables and results written to stdout by the CLI.
    """

    stream: Stream = Stream.STDERR


class FileLogHandler(LogHandler):
    r"""Log messages to a rotating log file.

    Parameters
    ----------
    unique : bool, default False
        If True a uuid is prepended to the filename, giving every run its own log file.

    path : pathlib.Path, default "~/logs/IANRelight/IANRelight.log"
        The log file. A directory gets the default filename appended.
        The parent directory is created if it does not exist.

    max_bytes : int, default 1_000_000
        The size of the log file at which it is rotated.

    backup_count : int, default 4
        The number of rotated log files to keep.

    mode : str, default 'a'
        The file mode, 'a' appends to an existing file.

    encoding : str, default 'UTF-8'
        The character encoding of the log file.
    """

    unique: bool = False
    path: Path = Field(default=LOGGING_DEFAULT_FILE_PATH, validate_default=True)
    max_bytes: int = Field(default=1_000_000, ge=0)
    backup_count: int = Field(default=4, ge=0)
    mode: str = 'a'
    encoding: str = 'UTF-8'

    @field_validator('path')
    @classmethod
    def set_path(cls, path: Path, info: ValidationInfo) -> Path:
        r"""Resolve the path of the log file and create its directory."""

        path = path.expanduser()
        if path.is_dir():
            path = path / LOGGING_DEFAULT_FILENAME

        if info.data.get('unique') is True:
            path = path.with_name(f'{uuid4()}_{path.name}')

        path = path.resolve()
        path.parent.mkdir(exist_ok=True, parents=True)

        return path


class LoggingConfig(BaseConfigModel):
    r"""The logging configuration of IANRelight.

    Parameters
    ----------
    disabled : bool, default False
        True if logging should be disabled completely.

    min_log_level : ianrelight.config.LogLevel, default ianrelight.config.LogLevel.INFO
        The level of the configured logger.

    format : str or None, default None
        The format used by handlers without an explicit format.

    datetime_format : str, default ianrelight.config.LOGGING_DEFAULT_DATETIME_FORMAT
        The timestamp format used by handlers without an explicit datetime format.

    capture_warnings : bool, default True
        True if warnings, e.g. numpy floating point warnings, should be logged.

    stream : dict[str, ianrelight.config.StreamLogHandler] or None, default None
        The stream handlers by name.

    file : dict[str, ianrelight.config.FileLogHandler] or None, default None
        The file handlers by name.
    """

    disabled: bool = False
    min_log_level: LogLevel = LogLevel.INFO
    format: LogFormatBasedOnLogLevel = Field(default=None, validate_default=True)
    datetime_format: str = LOGGING_DEFAULT_DATETIME_FORMAT
    capture_warnings: bool = True
    stream: dict[str, StreamLogHandler] | None = None
    file: dict[str, FileLogHandler] | None = None

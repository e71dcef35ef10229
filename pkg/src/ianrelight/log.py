# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Configure the logging for IANRelight."""

# Standard Library
import logging
import sys
from collections.abc import Callable, Mapping, Sequence
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any

# Local
from ianrelight import exceptions
from ianrelight.config import (
    LoggingConfig,
    LogHandler,
    LogHandlerType,
    Stream,
    StreamLogHandler,
)

type CreateLogHandlerFunc = Callable[..., logging.Handler]

DEFAULT_HANDLER_NAME = 'default'


def create_stream_handler(stream: Stream, **_kwargs: Any) -> logging.StreamHandler:
    r"""Create a handler writing to stdout or stderr.

    Raises
    ------
    ianrelight.IANRelightError
        If an invalid `stream` is supplied.
    """

    streams = {Stream.STDOUT: sys.stdout, Stream.STDERR: sys.stderr}
    selected_stream = streams.get(stream)

    if selected_stream is None:
        raise exceptions.IANRelightError(
            f'{stream=} is not a valid option! Valid streams are : {tuple(streams.keys())}'
        )

    return logging.StreamHandler(stream=selected_stream)


def create_file_handler(
    path: Path,
    max_bytes: int = 1_000_000,
    backup_count: int = 4,
    mode: str = 'a',
    encoding: str = 'UTF-8',
    **_kwargs: Any,
) -> RotatingFileHandler:
    r"""Create a handler writing to a rotating log file.

    Parameters
    ----------
    path : pathlib.Path
        The full path to the log file.

    max_bytes : int, default 1_000_000
        The size of the log file at which it is rotated.

    backup_count : int, default 4
        The number of rotated log files to keep.

    mode : str, default 'a'
        The file mode.

    encoding : str, default 'UTF-8'
        The character encoding of the log file.

    **_kwargs : Any
        Settings of the handler config not used by the function.

    Returns
    -------
    logging.handlers.RotatingFileHandler
        The configured file handler.
    """

    return RotatingFileHandler(
        filename=path,
        mode=mode,
        maxBytes=max_bytes,
        backupCount=backup_count,
        encoding=encoding,
    )


HANDLER_FUNCS: dict[LogHandlerType, CreateLogHandlerFunc] = {
    LogHandlerType.STREAM: create_stream_handler,
    LogHandlerType.FILE: create_file_handler,
}


def add_handlers(
    logger: logging.Logger,
    handler_type: LogHandlerType,
    config: Mapping[str, LogHandler] | None,
    exclude: Sequence[str] | None,
    default_format: str | None,
    default_datetime_format: str,
) -> int:
    r"""Add handlers of one type to a logger.

    Parameters
    ----------
    logger : logging.Logger
        The logger to add the handlers to.

    handler_type : ianrelight.config.LogHandlerType
        The type of the handlers.

    config : Mapping[str, ianrelight.config.LogHandler] or None
        The handler configurations by name. If None no handlers are added.

    exclude : Sequence[str] or None
        The names of handlers in `config` not to add.

    default_format : str or None
        The format of handlers without an explicitly set format.

    default_datetime_format : str
        The datetime format of handlers without an explicitly set datetime format.

    Returns
    -------
    int
        The number of added handlers.

    Raises
    ------
    ianrelight.IANRelightError
        If `handler_type` has no function creating the handler.
    """

    if config is None:
        return 0

    func = HANDLER_FUNCS.get(handler_type)
    if func is None:
        raise exceptions.IANRelightError(
            f'LogHandlerType "{handler_type}" has no create log handler function!\n'
            f'Supported log handlers: {tuple(HANDLER_FUNCS.keys())}'
        )

    _exclude = set() if exclude is None else set(exclude)
    added = 0

    for name, cfg in config.items():
        if name in _exclude or cfg.disabled:
            continue

        handler = func(**cfg.model_dump())
        handler.setLevel(cfg.min_log_level)
        handler.set_name(name)

        fmt = cfg.format if 'format' in cfg.model_fields_set else default_format
        dfmt = (
            cfg.datetime_format
            if 'datetime_format' in cfg.model_fields_set
            else default_datetime_format
        )
        handler.setFormatter(logging.Formatter(fmt=fmt, datefmt=dfmt))

        logger.addHandler(handler)
        added += 1

    return added


def setup_logging(
    config: LoggingConfig,
    logger: logging.Logger | None = None,
    exclude: Mapping[LogHandlerType, Sequence[str]] | None = None,
) -> logging.Logger:
    r"""Setup and configure a logger.

    If the configuration defines no handlers a stream handler to stderr named "default"
    is added, so that the progress of long running commands is visible.

    Parameters
    ----------
    config : ianrelight.config.LoggingConfig
        The logging configuration.

    logger : logging.Logger or None, default None
        The logger to configure. If None the root logger is configured.

    exclude : Mapping[ianrelight.config.LogHandlerType, Sequence[str]] or None
        The names of the handlers per handler type not to add.

    Returns
    -------
    logging.Logger
        The configured logger.
    """

    logger = logging.getLogger() if logger is None else logger

    if config.disabled:
        logger.setLevel(logging.CRITICAL + 1)
        return logger

    logger.setLevel(config.min_log_level)
    logging.captureWarnings(config.capture_warnings)

    _exclude = {} if exclude is None else exclude

    stream = config.stream
    if stream is None and config.file is None:
        stream = {DEFAULT_HANDLER_NAME: StreamLogHandler(min_log_level=config.min_log_level)}

    for handler_type, handler_config in (
        (LogHandlerType.STREAM, stream),
        (LogHandlerType.FILE, config.file),
    ):
        add_handlers(
            logger=logger,
            handler_type=handler_type,
            config=handler_config,
            exclude=_exclude.get(handler_type),
            default_format=config.format,
            default_datetime_format=config.datetime_format,
        )

    return logger

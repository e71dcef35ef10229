# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The RunConfig and the config loading functions."""

# Standard library
import json
import logging
import os
import sys
import tomllib
from collections.abc import Mapping
from pathlib import Path
from typing import Any, Self

# Third party
from pydantic import Field, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Local
from ianrelight import exceptions
from ianrelight.config.core import CONFIG_FILE_ENV_VAR, CONFIG_FILE_PATH
from ianrelight.config.data import DatasetSpec
from ianrelight.config.log import LoggingConfig
from ianrelight.config.model import IANConfig, LossWeights
from ianrelight.config.run import TrainParams

logger = logging.getLogger(__name__)

type ConfigMapping = dict[str, Any]


class RunConfig(BaseSettings):
    r"""The complete configuration of IANRelight.

    Every field has a default and unknown keys are rejected. Fields can be set from
    environment variables prefixed with "IANRELIGHT_", where nested fields are separated
    by a double underscore, e.g. IANRELIGHT_RUN__ITERATIONS=50.

    Parameters
    ----------
    config_file_path : pathlib.Path or None, default None
        The path to the config file from which the configuration was loaded.
        The special path '-' specifies that the config was loaded from stdin.
        If None the default configuration was loaded.

    model : ianrelight.config.IANConfig
        The architecture of the network.

    loss : ianrelight.config.LossWeights
        The weights of the training loss.

    data : ianrelight.config.DatasetSpec
        The specification of generated datasets.

    run : ianrelight.config.TrainParams
        The parameters of a training run.

    logging : ianrelight.config.LoggingConfig
        The logging configuration.
    """

    model_config = SettingsConfigDict(
        frozen=True, extra='forbid', env_prefix='ianrelight_', env_nested_delimiter='__'
    )

    config_file_path: Path | None = None
    model: IANConfig = Field(default_factory=IANConfig)
    loss: LossWeights = Field(default_factory=LossWeights)
    data: DatasetSpec = Field(default_factory=DatasetSpec)
    run: TrainParams = Field(default_factory=TrainParams)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    def __init__(self, **kwargs: Any) -> None:
        try:
            super().__init__(**kwargs)
        except ValidationError as e:
            raise exceptions.ConfigError(str(e)) from None

    @model_validator(mode='after')
    def validate_level_weights(self) -> Self:
        r"""Validate that the configured level weights match the number of levels."""

        weights = self.loss.level_weights
        if weights is not None and len(weights) != self.model.levels:
            raise ValueError(
                f'{len(weights)} level weights configured '
                f'for {self.model.levels} level(s)!'
            )
        return self

    def to_dict(self) -> ConfigMapping:
        r"""The JSON-serializable configuration, e.g. for echoing or storing in a checkpoint."""
        return self.model_dump(mode='json', exclude={'config_file_path'})


def deep_merge(base: Mapping[str, Any], updates: Mapping[str, Any]) -> ConfigMapping:
    r"""Recursively merge `updates` into a copy of `base`, skipping None values of `updates`."""

    merged = dict(base)
    for key, value in updates.items():
        if value is None:
            continue
        if isinstance(value, Mapping) and isinstance(merged.get(key), Mapping):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value

    return merged


def parse_config(content: str, fmt: str) -> ConfigMapping:
    r"""Parse the content of a config file.

    Parameters
    ----------
    content : str
        The content to parse.

    fmt : {'toml', 'json'}
        The format of `content`.

    Returns
    -------
    dict[str, Any]
        The parsed configuration.

    Raises
    ------
    ianrelight.ParseConfigError
        If there are syntax errors in `content`.
    """

    try:
        data = json.loads(content) if fmt == 'json' else tomllib.loads(content)
    except json.JSONDecodeError as e:
        raise exceptions.ParseConfigError(f'Syntax error in config : {e!s}') from None
    except (tomllib.TOMLDecodeError, TypeError) as e:
        raise exceptions.ParseConfigError(f'Syntax error in config : {e.args[0]}') from None

    if not isinstance(data, dict):
        raise exceptions.ParseConfigError(
            f'The config must be a mapping, got {type(data).__name__}!'
        )

    return data


def _load_config_from_stdin() -> tuple[str, str]:
    r"""Load the configuration from stdin and detect its format."""

    content = '' if sys.stdin.isatty() else sys.stdin.read()
    fmt = 'json' if content.lstrip().startswith('{') else 'toml'

    return content, fmt


def _load_config_from_file(path: Path) -> tuple[str, str]:
    r"""Load the configuration from a config file.

    A missing file at the default location yields empty content.
    """

    fmt = 'json' if path.suffix.lower() == '.json' else 'toml'

    if path.is_dir():
        error_msg = f'The config file "{path}" must be a file not a directory!'
        raise exceptions.ConfigFileNotFoundError(message=error_msg, data=path)

    if path == CONFIG_FILE_PATH:
        return (path.read_text() if path.exists() else ''), fmt

    if not path.exists():
        raise exceptions.ConfigFileNotFoundError(
            message=f'The config file "{path}" does not exist!', data=path
        )

    return path.read_text(), fmt


def load_config(path: Path | None = None, overrides: Mapping[str, Any] | None = None) -> RunConfig:
    r"""Load the configuration of IANRelight.

    The sources override each other in the following order, the latter taking precedence:

    1. The defaults of the config models.

    2. Environment variables prefixed with "IANRELIGHT_".

    3. The config file. It is the file given to `path`, stdin if `path` is
       `pathlib.Path('-')`, the file named in environment variable IANRELIGHT_CONFIG_FILE or
       the default config file "~/.config/IANRelight/IANRelight.toml", whichever comes first.
       Files with the suffix ".json" are parsed as JSON and all others as TOML.

    4. The `overrides`, e.g. from command line options.

    If no config file exists the defaults are used.

    Parameters
    ----------
    path : pathlib.Path or None, default None
        The path to the config file. Specify `Path('-')` for stdin.

    overrides : Mapping[str, Any] or None, default None
        Nested values by section, e.g. ``{'run': {'iterations': 50}}``. None values are ignored.

    Returns
    -------
    ianrelight.config.RunConfig
        The configuration.

    Raises
    ------
    ianrelight.ConfigError
        If the configuration is invalid or stdin was specified but is empty.

    ianrelight.ConfigFileNotFoundError
        If the configuration file could not be found.

    ianrelight.ParseConfigError
        If there are syntax errors in the config file.
    """

    file_path: Path | None
    if path is None:
        _file_path = os.getenv(CONFIG_FILE_ENV_VAR)
        file_path = CONFIG_FILE_PATH if _file_path is None else Path(_file_path)
    elif path.name == '-':
        file_path = None
    else:
        file_path = path

    if file_path is None:
        content, fmt = _load_config_from_stdin()
        if not content.strip():
            raise exceptions.ConfigError('No configuration found on stdin!')
        source: str | None = '-'
    else:
        content, fmt = _load_config_from_file(path=file_path)
        source = str(file_path) if content else None

    data = parse_config(content, fmt=fmt) if content else {}
    data = deep_merge(data, overrides or {})
    data.pop('config_file_path', None)
    logger.debug(f'Loading config from {source or "the defaults"}.')

    return RunConfig(config_file_path=source, **data)

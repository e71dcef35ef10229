# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The configuration of IANRelight."""

from ianrelight.config.config import RunConfig, deep_merge, load_config, parse_config
from ianrelight.config.core import (
    CONFIG_DIR,
    CONFIG_FILE_ENV_VAR,
    CONFIG_FILE_PATH,
    CONFIG_FILENAME,
    PROG_NAME,
    BaseConfigModel,
)
from ianrelight.config.data import (
    DEFAULT_INPUT_LIGHT,
    DEFAULT_TARGET_LIGHT,
    MAX_TEMPERATURE,
    MIN_TEMPERATURE,
    DatasetSpec,
    LightPolicy,
    LightSetting,
)
from ianrelight.config.log import (
    LOGGING_DEFAULT_DATETIME_FORMAT,
    LOGGING_DEFAULT_DIR,
    LOGGING_DEFAULT_FILE_PATH,
    LOGGING_DEFAULT_FILENAME,
    LOGGING_DEFAULT_FORMAT,
    LOGGING_DEFAULT_FORMAT_DEBUG,
    FileLogHandler,
    LoggingConfig,
    LogHandler,
    LogHandlerType,
    LogLevel,
    Stream,
    StreamLogHandler,
)
from ianrelight.config.model import (
    DGGE_STAGES,
    ENCODER_SCALES,
    LOSS_PRESETS,
    BlockVariant,
    IANConfig,
    LossPreset,
    LossWeights,
)
from ianrelight.config.run import TrainParams

# The Public API
__all__ = [
    # config
    'RunConfig',
    'deep_merge',
    'load_config',
    'parse_config',
    # core
    'CONFIG_DIR',
    'CONFIG_FILE_ENV_VAR',
    'CONFIG_FILE_PATH',
    'CONFIG_FILENAME',
    'PROG_NAME',
    'BaseConfigModel',
    # data
    'DEFAULT_INPUT_LIGHT',
    'DEFAULT_TARGET_LIGHT',
    'MAX_TEMPERATURE',
    'MIN_TEMPERATURE',
    'DatasetSpec',
    'LightPolicy',
    'LightSetting',
    # log
    'LOGGING_DEFAULT_DATETIME_FORMAT',
    'LOGGING_DEFAULT_DIR',
    'LOGGING_DEFAULT_FILE_PATH',
    'LOGGING_DEFAULT_FILENAME',
    'LOGGING_DEFAULT_FORMAT',
    'LOGGING_DEFAULT_FORMAT_DEBUG',
    'FileLogHandler',
    'LoggingConfig',
    'LogHandler',
    'LogHandlerType',
    'LogLevel',
    'Stream',
    'StreamLogHandler',
    # model
    'DGGE_STAGES',
    'ENCODER_SCALES',
    'LOSS_PRESETS',
    'BlockVariant',
    'IANConfig',
    'LossPreset',
    'LossWeights',
    # run
    'TrainParams',
]

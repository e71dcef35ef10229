# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The exception hierarchy of IANRelight."""

# Standard library
from typing import Any


class IANRelightError(Exception):
    r"""The base Exception of IANRelight.

    Parameters
    ----------
    message : str
        The error message.

    data : Any, default None
        Optional extra data to include in the exception.
    """

    def __init__(self, message: str, data: Any = None) -> None:
        self.message = message
        self.data = data
        super().__init__(message)


class ConfigError(IANRelightError):
    r"""Errors related to the configuration of IANRelight."""


class ConfigFileNotFoundError(ConfigError):
    r"""If the config file cannot be found."""


class ParseConfigError(ConfigError):
    r"""If the config file cannot be parsed correctly."""


class ShapeError(IANRelightError):
    r"""If tensor shapes, channel counts or spatial sizes are incompatible."""


class TensorError(IANRelightError):
    r"""If an operation on the autograd tape cannot be performed."""


class CheckpointError(IANRelightError):
    r"""If a checkpoint file cannot be written, read or matched against a configuration."""


class DatasetError(IANRelightError):
    r"""Errors related to datasets, images and their manifest."""

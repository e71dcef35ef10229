# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The core config models."""

# Standard library
from pathlib import Path
from typing import Any

# Third party
from pydantic import BaseModel, ConfigDict, ValidationError

# Local
from ianrelight import exceptions

PROG_NAME = 'IANRelight'

CONFIG_DIR = Path.home() / '.config' / PROG_NAME

CONFIG_FILENAME = f'{PROG_NAME}.toml'

CONFIG_FILE_PATH = CONFIG_DIR / CONFIG_FILENAME

CONFIG_FILE_ENV_VAR = 'IANRELIGHT_CONFIG_FILE'


class BaseConfigModel(BaseModel):
    r"""The base model that all configuration models inherit from.

    Unknown keys are rejected and validation errors are raised as :exc:`ianrelight.ConfigError`.
    """

    model_config = ConfigDict(frozen=True, extra='forbid', arbitrary_types_allowed=True)

    def __init__(self, **kwargs: Any) -> None:
        try:
            super().__init__(**kwargs)
        except ValidationError as e:
            raise exceptions.ConfigError(str(e)) from None

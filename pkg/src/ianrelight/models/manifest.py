# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The manifest of a stored dataset."""

# Standard library
from pathlib import Path
from typing import Literal, Self

# Third party
from pydantic import NonNegativeInt, PositiveInt, ValidationError, model_validator

# Local
from ianrelight import exceptions
from ianrelight.config import LightPolicy
from ianrelight.models.core import BaseModel
from ianrelight.models.light import SH_ORDER, LightRecord
from ianrelight.models.scene import Scene

MANIFEST_FILENAME = 'manifest.json'
SCHEMA_VERSION = 1


class ManifestRecord(BaseModel):
    r"""A scene pair of a dataset.

    Parameters
    ----------
    id : int
        The index of the pair.

    input : str
        The path of the input image relative to the dataset directory.

    target : str
        The path of the target image relative to the dataset directory.

    depth : str or None, default None
        The path of the 16-bit depth map relative to the dataset directory.

    light_in : ianrelight.models.LightRecord or None, default None
        The light of the input image.

    light_out : ianrelight.models.LightRecord or None, default None
        The light of the target image.

    scene : ianrelight.models.Scene or None, default None
        The scene for re-rendering the pair.
    """

    id: NonNegativeInt
    input: str
    target: str
    depth: str | None = None
    light_in: LightRecord | None = None
    light_out: LightRecord | None = None
    scene: Scene | None = None


class Manifest(BaseModel):
    r"""The manifest listing the files and lights of a dataset.

    Parameters
    ----------
    schema_version : int
        The version of the manifest format.

    seed : int or None
        The seed the dataset was generated with. None for an imported dataset.

    size : int
        The height and width of the images.

    policy : ianrelight.config.LightPolicy or None, default None
        The light policy of a generated dataset.

    sh_order : tuple[str, ...]
        The order of the SH coefficients of the lights.

    records : list[ianrelight.models.ManifestRecord]
        The scene pairs.
    """

    schema_version: Literal[1] = SCHEMA_VERSION
    seed: int | None = None
    size: PositiveInt
    policy: LightPolicy | None = None
    sh_order: tuple[str, ...] = SH_ORDER
    records: list[ManifestRecord]

    @model_validator(mode='after')
    def validate_records(self) -> Self:
        r"""Validate that the record ids are unique and the depth and lights are uniform."""

        ids = [r.id for r in self.records]
        if len(set(ids)) != len(ids):
            raise ValueError('The record ids of the manifest are not unique!')

        for attr in ('depth', 'light_in', 'light_out'):
            present = {getattr(r, attr) is not None for r in self.records}
            if len(present) > 1:
                raise ValueError(f'Field "{attr}" must be given for all records or for none!')

        return self

    @property
    def count(self) -> int:
        return len(self.records)

    @property
    def has_depth(self) -> bool:
        return bool(self.records) and self.records[0].depth is not None

    @property
    def has_lights(self) -> bool:
        return bool(self.records) and self.records[0].light_out is not None

    def write(self, directory: Path) -> Path:
        r"""Write the manifest as JSON to `directory` and return the path of the file."""

        path = directory / MANIFEST_FILENAME
        path.write_text(self.model_dump_json(indent=2, exclude_none=True), encoding='utf-8')
        return path

    @classmethod
    def read(cls, directory: Path) -> Self:
        r"""Read the manifest of the dataset in `directory`.

        Raises
        ------
        ianrelight.DatasetError
            If the manifest does not exist or is invalid.
        """

        path = directory / MANIFEST_FILENAME
        try:
            content = path.read_text(encoding='utf-8')
        except OSError as e:
            raise exceptions.DatasetError(f'Cannot read the manifest "{path}"!\n{e!s}') from None

        try:
            return cls.model_validate_json(content)
        except (ValidationError, exceptions.IANRelightError) as e:
            raise exceptions.DatasetError(f'Invalid manifest "{path}"!\n{e!s}') from None

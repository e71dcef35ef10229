# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The header of a checkpoint file."""

# Standard library
import math
from typing import Any

# Third party
from pydantic import NonNegativeInt

# Local
from ianrelight.config import IANConfig
from ianrelight.models.core import BaseModel


class ArrayEntry(BaseModel):
    r"""The location of an array in the data section of a checkpoint.

    Parameters
    ----------
    name : str
        The name of the array, e.g. "param/level0.encoder.conv0.weight".

    dtype : str
        The numpy type string of the stored data, always "<f4".

    shape : tuple[int, ...]
        The shape of the array.

    offset : int
        The byte offset of the array from the start of the data section.
    """

    name: str
    dtype: str
    shape: tuple[NonNegativeInt, ...]
    offset: NonNegativeInt


class AdamHeader(BaseModel):
    r"""The scalar state of the Adam optimizer. The moments are stored as arrays."""

    lr: float
    beta1: float
    beta2: float
    eps: float
    step: NonNegativeInt


class CheckpointHeader(BaseModel):
    r"""The JSON header of a checkpoint.

    Parameters
    ----------
    model : ianrelight.config.IANConfig
        The architecture of the network.

    iteration : int, default 0
        The number of completed training iterations.

    adam : ianrelight.models.AdamHeader or None, default None
        The optimizer state. None for a checkpoint of an untrained or exported network.

    rng_state : dict[str, Any] or None, default None
        The state of the random generator of the batch order.

    run : dict[str, Any] or None, default None
        The complete configuration of the run that produced the checkpoint.

    arrays : list[ianrelight.models.ArrayEntry]
        The directory of the stored arrays.
    """

    model: IANConfig
    iteration: NonNegativeInt = 0
    adam: AdamHeader | None = None
    rng_state: dict[str, Any] | None = None
    run: dict[str, Any] | None = None
    arrays: list[ArrayEntry]

    @property
    def data_size(self) -> int:
        r"""The expected number of bytes of the data section."""
        return sum(4 * math.prod(a.shape) for a in self.arrays)

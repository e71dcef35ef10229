# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The models of lights and their spherical harmonic representation."""

# Standard library
import math
from typing import Annotated

# Third party
import numpy as np
from pydantic import Field, field_validator

# Local
from ianrelight.models.core import BaseModel

SH_ORDER = ('Y00', 'Y1-1', 'Y10', 'Y11', 'Y2-2', 'Y2-1', 'Y20', 'Y21', 'Y22')

type Vector3 = tuple[float, float, float]
type SH9 = Annotated[tuple[float, ...], Field(min_length=9, max_length=9)]


class SHLight(BaseModel):
    r"""A light as the nine order-2 spherical harmonic coefficients of its irradiance.

    The coefficients are ordered as :data:`SH_ORDER`: the DC term, the three order-1 terms
    (m = -1, 0, 1) and the five order-2 terms (m = -2 ... 2). The color of the light is a scalar
    coefficient set combined with an RGB tint.

    Parameters
    ----------
    coefficients : tuple[float, ...]
        The nine coefficients.

    tint : tuple[float, float, float], default (1.0, 1.0, 1.0)
        The RGB tint of the light.
    """

    coefficients: SH9
    tint: Vector3 = (1.0, 1.0, 1.0)

    @field_validator('coefficients')
    @classmethod
    def validate_finite(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not all(math.isfinite(c) for c in v):
            raise ValueError('The SH coefficients must be finite!')
        return v

    def to_numpy(self) -> np.ndarray:
        r"""The coefficients as an array of shape [9]."""
        return np.asarray(self.coefficients, dtype=np.float64)


class LightRecord(BaseModel):
    r"""A directional light of a scene pair as stored in the manifest.

    Parameters
    ----------
    dir : tuple[float, float, float]
        The unit vector pointing towards the light. x points east, y south and z to the camera.

    sh9 : tuple[float, ...]
        The nine SH coefficients of the irradiance of the light.

    azimuth : float
        The azimuth in degrees, 0 = north and 90 = east.

    elevation : float
        The elevation above the ground plane in degrees.

    temperature : float or None, default None
        The color temperature in Kelvin.

    tint : tuple[float, float, float], default (1.0, 1.0, 1.0)
        The RGB tint the color temperature is mapped to.

    intensity : float, default 1.0
        The intensity of the light.
    """

    dir: Vector3
    sh9: SH9
    azimuth: float
    elevation: float
    temperature: float | None = None
    tint: Vector3 = (1.0, 1.0, 1.0)
    intensity: float = 1.0

    @property
    def direction(self) -> np.ndarray:
        return np.asarray(self.dir, dtype=np.float64)

    @property
    def sh_light(self) -> SHLight:
        return SHLight(coefficients=self.sh9, tint=self.tint)

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The configuration of the synthetic dataset generator."""

# Standard library
from enum import StrEnum
from typing import Self

# Third party
from pydantic import Field, NonNegativeFloat, PositiveFloat, model_validator

# Local
from ianrelight.config.core import BaseConfigModel

MIN_TEMPERATURE = 2500
MAX_TEMPERATURE = 6500


class LightPolicy(StrEnum):
    r"""How the input and target lights of the scene pairs are chosen.

    Members
    -------
    FIXED
        Every pair uses the same input and target light (one-to-one relighting).

    RANDOM
        Every pair draws its own input and target light (arbitrary relighting).
    """

    FIXED = 'fixed'
    RANDOM = 'random'


class LightSetting(BaseConfigModel):
    r"""A directional light.

    Parameters
    ----------
    azimuth : float
        The compass direction of the light in degrees. 0 is north (the top of the image)
        and 90 is east (the right of the image).

    elevation : float
        The angle above the image plane in degrees, 90 being straight from the camera.

    temperature : int
        The color temperature in Kelvin in [2500, 6500], rendered as an RGB tint.
    """

    azimuth: float = Field(ge=0, lt=360)
    elevation: float = Field(ge=-90, le=90)
    temperature: int = Field(default=6500, ge=MIN_TEMPERATURE, le=MAX_TEMPERATURE)


DEFAULT_INPUT_LIGHT = LightSetting(azimuth=0, elevation=45, temperature=4500)
DEFAULT_TARGET_LIGHT = LightSetting(azimuth=90, elevation=45, temperature=6500)


class DatasetSpec(BaseConfigModel):
    r"""The specification of a synthetic dataset of relit scene pairs.

    Parameters
    ----------
    count : int, default 200
        The number of scene pairs.

    size : int, default 64
        The height and width of the images in pixels.

    seed : int, default 7
        The seed of the generator. The same seed yields byte-identical files.

    policy : ianrelight.config.LightPolicy, default LightPolicy.FIXED
        How the lights of the pairs are chosen.

    min_spheres : int, default 1
        The minimum number of spheres in a scene.

    max_spheres : int, default 4
        The maximum number of spheres in a scene.

    min_radius : float, default 0.12
        The minimum sphere radius as a fraction of `size`.

    max_radius : float, default 0.3
        The maximum sphere radius as a fraction of `size`.

    min_albedo : float, default 0.2
        The minimum albedo of every color channel.

    max_albedo : float, default 0.9
        The maximum albedo of every color channel.

    ambient : float, default 0.05
        The ambient light added to every lit surface.

    intensity : float, default 0.9
        The intensity of the directional light.

    input_light : ianrelight.config.LightSetting
        The input light of the fixed policy, north at 45° and 4500K by default.

    target_light : ianrelight.config.LightSetting
        The target light of the fixed policy, east at 45° and 6500K by default.

    min_elevation : float, default 20
        The minimum elevation in degrees of lights drawn by the random policy.

    max_elevation : float, default 70
        The maximum elevation in degrees of lights drawn by the random policy.
    """

    count: int = Field(default=200, ge=1)
    size: int = Field(default=64, ge=16)
    seed: int = 7
    policy: LightPolicy = LightPolicy.FIXED
    min_spheres: int = Field(default=1, ge=0)
    max_spheres: int = Field(default=4, ge=0)
    min_radius: PositiveFloat = 0.12
    max_radius: PositiveFloat = 0.3
    min_albedo: NonNegativeFloat = 0.2
    max_albedo: float = Field(default=0.9, le=1)
    ambient: NonNegativeFloat = 0.05
    intensity: PositiveFloat = 0.9
    input_light: LightSetting = DEFAULT_INPUT_LIGHT
    target_light: LightSetting = DEFAULT_TARGET_LIGHT
    min_elevation: float = Field(default=20, ge=0, le=90)
    max_elevation: float = Field(default=70, ge=0, le=90)

    @model_validator(mode='after')
    def validate_ranges(self) -> Self:
        r"""Validate that the lower bound of every range does not exceed the upper bound."""

        for name in ('spheres', 'radius', 'albedo', 'elevation'):
            low, high = getattr(self, f'min_{name}'), getattr(self, f'max_{name}')
            if low > high:
                raise ValueError(f'min_{name} ({low}) must not exceed max_{name} ({high})!')

        if self.max_radius >= 0.5:  # noqa: PLR2004
            raise ValueError(f'max_radius ({self.max_radius}) must be below 0.5 of the image size!')

        return self

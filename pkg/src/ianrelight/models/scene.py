# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The descriptors of the synthetic scenes."""

# Third party
from pydantic import NonNegativeFloat, PositiveFloat, PositiveInt

# Local
from ianrelight.models.core import BaseModel

type RGB = tuple[float, float, float]


class Sphere(BaseModel):
    r"""A sphere resting on the ground plane.

    Coordinates are in pixels. x runs along the image columns, y along the image rows and z
    from the ground plane towards the camera.

    Parameters
    ----------
    cx : float
        The x-coordinate of the center.

    cy : float
        The y-coordinate of the center.

    cz : float
        The height of the center above the ground plane.

    radius : float
        The radius.

    albedo : tuple[float, float, float]
        The RGB albedo.
    """

    cx: float
    cy: float
    cz: float
    radius: PositiveFloat
    albedo: RGB


class Scene(BaseModel):
    r"""A scene of spheres on a ground plane seen by an orthographic camera.

    Parameters
    ----------
    size : int
        The height and width of the rendered image in pixels.

    spheres : tuple[ianrelight.models.Sphere, ...]
        The spheres of the scene.

    plane_albedo : tuple[float, float, float]
        The RGB albedo of the ground plane at z = 0.

    camera_z : float or None, default None
        The height of the camera. Defaults to `size`, above every sphere.
    """

    size: PositiveInt
    spheres: tuple[Sphere, ...] = ()
    plane_albedo: RGB = (0.5, 0.5, 0.5)
    camera_z: NonNegativeFloat | None = None

    @property
    def z_cam(self) -> float:
        return float(self.size) if self.camera_z is None else self.camera_z

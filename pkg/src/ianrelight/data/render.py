# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""An analytic Lambertian renderer of spheres on a ground plane.

The camera is orthographic and looks down the z-axis onto the ground plane at z = 0. The pixel
in row i and column j samples the scene at x = j + 0.5 and y = i + 0.5. Every surface is a
Lambertian reflector without shadows,
``I = albedo · tint · intensity · max(0, n · l) + ambient``.
"""

# Standard library
import logging
from collections.abc import Sequence
from typing import NamedTuple

# Third party
import numpy as np

# Local
from ianrelight.models import Scene, Sphere

logger = logging.getLogger(__name__)

GEOMETRY_QUANTUM = 1 / 256


class Rendering(NamedTuple):
    r"""The result of rendering a scene.

    Parameters
    ----------
    image : numpy.ndarray
        The RGB image [3, H, W].

    depth : numpy.ndarray
        The depth [1, H, W] as ``(z_cam - z) / z_cam``, 0 at the camera and 1 at the plane.

    normal : numpy.ndarray
        The unit surface normals [3, H, W] in the scene frame.
    """

    image: np.ndarray
    depth: np.ndarray
    normal: np.ndarray


def quantize_geometry(value: float) -> float:
    r"""Round a coordinate to a multiple of 1/256 pixel.

    Mirroring quantized coordinates is exact in floating point.
    """

    return round(value / GEOMETRY_QUANTUM) * GEOMETRY_QUANTUM


def _surface(scene: Scene) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    size = scene.size
    y, x = np.meshgrid(np.arange(size) + 0.5, np.arange(size) + 0.5, indexing='ij')

    z = np.zeros((size, size))
    normal = np.zeros((3, size, size))
    normal[2] = 1.0
    albedo = np.broadcast_to(np.asarray(scene.plane_albedo)[:, None, None], (3, size, size)).copy()

    for sphere in scene.spheres:
        dx, dy = x - sphere.cx, y - sphere.cy
        q = sphere.radius**2 - dx * dx - dy * dy
        h = np.sqrt(np.maximum(q, 0.0))
        zs = sphere.cz + h
        visible = (q > 0) & (zs > z)

        z = np.where(visible, zs, z)
        for c, component in enumerate((dx, dy, h)):
            normal[c] = np.where(visible, component / sphere.radius, normal[c])
        for c in range(3):
            albedo[c] = np.where(visible, sphere.albedo[c], albedo[c])

    return z, normal, albedo


def render_lambertian(
    scene: Scene,
    direction: Sequence[float] | np.ndarray,
    intensity: float = 1.0,
    ambient: float = 0.0,
    tint: tuple[float, float, float] = (1.0, 1.0, 1.0),
    clamp: bool = True,
) -> Rendering:
    r"""Render a scene lit by a directional light.

    Parameters
    ----------
    scene : ianrelight.models.Scene
        The scene. A scene without spheres renders the ground plane only.

    direction : Sequence[float] or numpy.ndarray
        The unit direction towards the light.

    intensity : float, default 1.0
        The intensity of the light.

    ambient : float, default 0.0
        The ambient light added to every pixel.

    tint : tuple[float, float, float], default (1.0, 1.0, 1.0)
        The RGB tint of the light.

    clamp : bool, default True
        True if the image is clamped to [0, 1].

    Returns
    -------
    ianrelight.data.Rendering
        The image, depth and normals.
    """

    z, normal, albedo = _surface(scene)
    lx, ly, lz = (float(c) for c in direction)

    shading = np.maximum(normal[0] * lx + normal[1] * ly + normal[2] * lz, 0.0)
    radiance = intensity * shading
    image = albedo * np.asarray(tint)[:, None, None] * radiance + ambient
    if clamp:
        image = np.clip(image, 0.0, 1.0)

    z_cam = scene.z_cam
    depth = ((z_cam - z) / z_cam)[None]

    return Rendering(image=image, depth=depth, normal=normal)


def mirror_scene(scene: Scene) -> Scene:
    r"""Mirror a scene at the vertical center line of the image."""

    spheres = tuple(
        Sphere(cx=scene.size - s.cx, cy=s.cy, cz=s.cz, radius=s.radius, albedo=s.albedo)
        for s in scene.spheres
    )
    return scene.model_copy(update={'spheres': spheres})


def random_scene(
    rng: np.random.Generator,
    size: int,
    n_spheres: tuple[int, int] = (1, 4),
    radius: tuple[float, float] = (0.12, 0.3),
    albedo: tuple[float, float] = (0.2, 0.9),
) -> Scene:
    r"""Draw a scene of spheres resting on the ground plane.

    Parameters
    ----------
    rng : numpy.random.Generator
        The random generator.

    size : int
        The height and width of the image.

    n_spheres : tuple[int, int], default (1, 4)
        The inclusive range of the number of spheres.

    radius : tuple[float, float], default (0.12, 0.3)
        The range of the radii as a fraction of `size`.

    albedo : tuple[float, float], default (0.2, 0.9)
        The range of every albedo channel of the spheres and the plane.

    Returns
    -------
    ianrelight.models.Scene
        The scene with all coordinates quantized to 1/256 pixel.
    """

    spheres = []
    for _ in range(int(rng.integers(n_spheres[0], n_spheres[1] + 1))):
        r = quantize_geometry(rng.uniform(*radius) * size)
        cx = quantize_geometry(rng.uniform(r, size - r))
        cy = quantize_geometry(rng.uniform(r, size - r))
        rgb = tuple(float(a) for a in rng.uniform(*albedo, size=3))
        spheres.append(Sphere(cx=cx, cy=cy, cz=r, radius=r, albedo=rgb))

    plane = tuple(float(a) for a in rng.uniform(*albedo, size=3))

    return Scene(size=size, spheres=tuple(spheres), plane_albedo=plane)

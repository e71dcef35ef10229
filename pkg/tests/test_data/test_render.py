# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the module data.render."""

# ruff: noqa: PLR2004

# Third party
import numpy as np
import pytest

# Local
from ianrelight.data import (
    GEOMETRY_QUANTUM,
    direction_from_angles,
    mirror_direction,
    mirror_scene,
    quantize_geometry,
    random_scene,
    render_lambertian,
)
from ianrelight.models import Scene, Sphere

# =================================================================================================
# Fixtures
# =================================================================================================


@pytest.fixture
def sphere_scene() -> Scene:
    r"""A sphere of radius 4 resting on the plane, centered on pixel (8, 8) of a 16x16 image."""

    sphere = Sphere(cx=8.5, cy=8.5, cz=4.0, radius=4.0, albedo=(0.8, 0.6, 0.4))
    return Scene(size=16, spheres=(sphere,), plane_albedo=(0.5, 0.5, 0.5))


# =================================================================================================
# Tests
# =================================================================================================


class TestRenderLambertian:
    r"""Tests for the function `ianrelight.data.render_lambertian`."""

    def test_empty_scene(self) -> None:
        r"""Test that the ground plane lit from above is uniformly shaded."""

        # Setup
        # ===========================================================
        scene = Scene(size=8, plane_albedo=(0.2, 0.4, 0.6))

        # Exercise
        # ===========================================================
        r = render_lambertian(scene, (0.0, 0.0, 1.0), intensity=0.5, ambient=0.1)

        # Verify
        # ===========================================================
        np.testing.assert_allclose(r.image[:, 3, 5], [0.2, 0.3, 0.4])
        np.testing.assert_array_equal(r.depth, 1.0)
        np.testing.assert_array_equal(r.normal[2], 1.0)

        # Clean up - None
        # ===========================================================

    def test_sphere_geometry(self, sphere_scene: Scene) -> None:
        r"""Test the depth and the normal at the top and the side of the sphere."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        r = render_lambertian(sphere_scene, (0.0, 0.0, 1.0))

        # Verify
        # ===========================================================
        assert r.depth[0, 8, 8] == pytest.approx((16 - 8) / 16)
        np.testing.assert_allclose(r.normal[:, 8, 8], [0.0, 0.0, 1.0])
        np.testing.assert_allclose(r.normal[:, 8, 10], [0.5, 0.0, np.sqrt(0.75)])
        assert r.depth[0, 0, 0] == 1.0

        # Clean up - None
        # ===========================================================

    def test_light_from_the_east(self, sphere_scene: Scene) -> None:
        r"""Test that a light from the east lights the eastern side of the sphere only."""

        # Setup
        # ===========================================================
        east = direction_from_angles(90, 0)

        # Exercise
        # ===========================================================
        r = render_lambertian(sphere_scene, east, tint=(1.0, 0.5, 1.0))

        # Verify
        # ===========================================================
        np.testing.assert_allclose(r.image[:, 8, 10], [0.4, 0.15, 0.2], atol=1e-12)
        np.testing.assert_allclose(r.image[:, 8, 6], 0.0, atol=1e-12)

        # Clean up - None
        # ===========================================================

    def test_clamp(self) -> None:
        r"""Test that the image is clamped to [0, 1] unless disabled."""

        # Setup
        # ===========================================================
        scene = Scene(size=4, plane_albedo=(1.0, 1.0, 1.0))

        # Exercise
        # ===========================================================
        clamped = render_lambertian(scene, (0.0, 0.0, 1.0), intensity=2.0)
        unclamped = render_lambertian(scene, (0.0, 0.0, 1.0), intensity=2.0, clamp=False)

        # Verify
        # ===========================================================
        np.testing.assert_array_equal(clamped.image, 1.0)
        np.testing.assert_array_equal(unclamped.image, 2.0)

        # Clean up - None
        # ===========================================================


class TestMirrorScene:
    r"""Tests for the function `ianrelight.data.mirror_scene`."""

    def test_mirrored_rendering(self, rng: np.random.Generator) -> None:
        r"""Test that the mirrored scene under the mirrored light renders the mirrored image."""

        # Setup
        # ===========================================================
        scene = random_scene(rng, size=24)
        light = direction_from_angles(60, 35)

        # Exercise
        # ===========================================================
        r = render_lambertian(scene, light)
        r_mirror = render_lambertian(mirror_scene(scene), mirror_direction(light))

        # Verify
        # ===========================================================
        np.testing.assert_allclose(r_mirror.image, r.image[..., ::-1], atol=1e-12)
        np.testing.assert_allclose(r_mirror.depth, r.depth[..., ::-1], atol=1e-12)
        assert mirror_scene(mirror_scene(scene)) == scene

        # Clean up - None
        # ===========================================================


class TestRandomScene:
    r"""Tests for the function `ianrelight.data.random_scene`."""

    def test_deterministic_and_quantized(self) -> None:
        r"""Test that a seed reproduces the scene and the geometry lies on the 1/256 grid."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        a = random_scene(np.random.default_rng(5), size=32, n_spheres=(2, 3))
        b = random_scene(np.random.default_rng(5), size=32, n_spheres=(2, 3))

        # Verify
        # ===========================================================
        assert a == b
        assert 2 <= len(a.spheres) <= 3
        for s in a.spheres:
            for value in (s.cx, s.cy, s.radius):
                assert value / GEOMETRY_QUANTUM == int(value / GEOMETRY_QUANTUM)
            assert s.cz == s.radius
            assert s.radius <= s.cx <= 32 - s.radius

        # Clean up - None
        # ===========================================================

    def test_quantize_geometry(self) -> None:
        r"""Test the rounding to the nearest multiple of 1/256."""

        # Setup - None
        # ===========================================================

        # Exercise
        # ===========================================================
        result = quantize_geometry(1.0 + 0.7 / 256)

        # Verify
        # ===========================================================
        assert result == 1.0 + 1 / 256

        # Clean up - None
        # ===========================================================

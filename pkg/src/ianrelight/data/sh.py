# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Order-2 real spherical harmonic lighting.

Directions use the scene frame of the renderer: x points east along the image columns,
y points south along the image rows and z points from the ground plane towards the camera.
The irradiance of a directional light of intensity s from direction d is
``E(n) = s · max(0, n · d)`` and is represented by its projection onto the nine real
spherical harmonics Y_lm, l <= 2, ordered as :data:`ianrelight.models.SH_ORDER`.
"""

# Standard library
import math
from collections.abc import Callable, Sequence

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.config import MAX_TEMPERATURE, MIN_TEMPERATURE
from ianrelight.models import SHLight

MIN_ORACLE_SAMPLES = 1000

# The normalization constants of the real spherical harmonics.
_Y00 = 0.5 * math.sqrt(1 / math.pi)
_Y1 = math.sqrt(3 / (4 * math.pi))
_Y2 = 0.5 * math.sqrt(15 / math.pi)
_Y20 = 0.25 * math.sqrt(5 / math.pi)
_Y22 = 0.25 * math.sqrt(15 / math.pi)

# The band factors of the clamped cosine kernel.
BAND_FACTORS = (math.pi, 2 * math.pi / 3, math.pi / 4)
SH_BANDS = (0, 1, 1, 1, 2, 2, 2, 2, 2)

# RGB tints of color temperatures, normalized to a maximum of 1.
_TINT_TEMPERATURES = (2500.0, 3500.0, 4500.0, 5500.0, 6500.0)
_TINT_RGB = (
    (1.00, 0.62, 0.32),
    (1.00, 0.76, 0.53),
    (1.00, 0.87, 0.74),
    (1.00, 0.95, 0.90),
    (1.00, 1.00, 1.00),
)

type RadianceFunc = Callable[[np.ndarray], np.ndarray]


def sh_basis(normals: np.ndarray) -> np.ndarray:
    r"""Evaluate the nine basis functions at unit vectors of shape [..., 3].

    Returns
    -------
    numpy.ndarray
        The values of shape [..., 9].
    """

    n = np.asarray(normals, dtype=np.float64)
    x, y, z = n[..., 0], n[..., 1], n[..., 2]

    return np.stack(
        [
            np.full_like(x, _Y00),
            _Y1 * y,
            _Y1 * z,
            _Y1 * x,
            _Y2 * x * y,
            _Y2 * y * z,
            _Y20 * (3 * z * z - 1),
            _Y2 * x * z,
            _Y22 * (x * x - y * y),
        ],
        axis=-1,
    )


def _unit(direction: Sequence[float] | np.ndarray) -> np.ndarray:
    d = np.asarray(direction, dtype=np.float64)
    if d.shape != (3,):
        raise exceptions.ShapeError(f'A direction must have 3 components, got shape {d.shape}!')

    norm = np.linalg.norm(d)
    if norm == 0 or not np.isfinite(norm):
        raise exceptions.IANRelightError(f'Cannot use {d.tolist()} as a light direction!')

    return d / norm


def sh_from_direction(
    direction: Sequence[float] | np.ndarray,
    intensity: float = 1.0,
    tint: tuple[float, float, float] = (1.0, 1.0, 1.0),
) -> SHLight:
    r"""The irradiance coefficients of a directional light.

    The coefficients are ``A_l · intensity · Y_lm(d)`` with the band factors A_l of the
    clamped cosine, so that ``sum_j c_j · Y_j(n)`` approximates ``intensity · max(0, n · d)``.

    Parameters
    ----------
    direction : Sequence[float] or numpy.ndarray
        The direction towards the light. It is normalized to unit length.

    intensity : float, default 1.0
        The intensity of the light.

    tint : tuple[float, float, float], default (1.0, 1.0, 1.0)
        The RGB tint of the light.

    Returns
    -------
    ianrelight.models.SHLight
        The light.

    Raises
    ------
    ianrelight.IANRelightError
        If `direction` is the zero vector.
    """

    d = _unit(direction)
    factors = np.array([BAND_FACTORS[band] for band in SH_BANDS])
    coefficients = factors * intensity * sh_basis(d)

    return SHLight(coefficients=tuple(float(c) for c in coefficients), tint=tint)


def sh_numeric_oracle(radiance_fn: RadianceFunc, samples: int = 20_000) -> SHLight:
    r"""Project a function on the sphere onto the nine basis functions by quadrature.

    The polar angle is integrated with Gauss-Legendre quadrature over cos(theta) and the
    azimuth with the trapezoidal rule, using about `samples` evaluations in total.

    Parameters
    ----------
    radiance_fn : Callable[[numpy.ndarray], numpy.ndarray]
        Maps unit vectors of shape [M, 3] to values of shape [M].

    samples : int, default 20_000
        The approximate number of evaluations of `radiance_fn`.

    Returns
    -------
    ianrelight.models.SHLight
        The projection coefficients.

    Raises
    ------
    ianrelight.IANRelightError
        If `samples` is less than 1000.
    """

    if samples < MIN_ORACLE_SAMPLES:
        raise exceptions.IANRelightError(
            f'The quadrature requires at least {MIN_ORACLE_SAMPLES} samples, got {samples}!'
        )

    n_theta = math.ceil(math.sqrt(samples / 2))
    n_phi = 2 * n_theta

    cos_theta, w_theta = np.polynomial.legendre.leggauss(n_theta)
    phi = np.arange(n_phi) * (2 * math.pi / n_phi)
    w_phi = 2 * math.pi / n_phi

    sin_theta = np.sqrt(1 - cos_theta**2)
    ct, pp = np.meshgrid(cos_theta, phi, indexing='ij')
    st = np.broadcast_to(sin_theta[:, None], ct.shape)
    normals = np.stack([st * np.cos(pp), st * np.sin(pp), ct], axis=-1).reshape(-1, 3)
    weights = np.broadcast_to(w_theta[:, None] * w_phi, ct.shape).reshape(-1)

    values = np.asarray(radiance_fn(normals), dtype=np.float64).reshape(-1)
    coefficients = (values * weights) @ sh_basis(normals)

    return SHLight(coefficients=tuple(float(c) for c in coefficients))


def irradiance(light: SHLight, normals: np.ndarray) -> np.ndarray:
    r"""Reconstruct the irradiance of `light` at unit normals [..., 3]."""
    return sh_basis(normals) @ light.to_numpy()


def direction_from_angles(azimuth: float, elevation: float) -> np.ndarray:
    r"""The unit direction towards a light at `azimuth` and `elevation` in degrees.

    Azimuth 0 is north (-y) and 90 is east (+x). Elevation 90 is straight above (+z).
    """

    az, el = math.radians(azimuth), math.radians(elevation)
    return np.array([math.cos(el) * math.sin(az), -math.cos(el) * math.cos(az), math.sin(el)])


def angles_from_direction(direction: Sequence[float] | np.ndarray) -> tuple[float, float]:
    r"""The azimuth in [0, 360) and the elevation in degrees of a direction."""

    x, y, z = _unit(direction)
    azimuth = math.degrees(math.atan2(x, -y)) % 360.0
    elevation = math.degrees(math.asin(max(-1.0, min(1.0, z))))

    return azimuth, elevation


def rotate_azimuth(direction: Sequence[float] | np.ndarray, degrees: float) -> np.ndarray:
    r"""Rotate a direction about the z-axis, increasing its azimuth by `degrees`."""

    d = _unit(direction)
    a = math.radians(degrees)
    c, s = math.cos(a), math.sin(a)

    return np.array([c * d[0] - s * d[1], s * d[0] + c * d[1], d[2]])


def mirror_direction(direction: Sequence[float] | np.ndarray) -> np.ndarray:
    r"""Mirror a direction at the north-south axis of the image, negating its x-component."""

    d = np.array(direction, dtype=np.float64)
    d[0] = -d[0]
    return d


def temperature_tint(temperature: float) -> tuple[float, float, float]:
    r"""The RGB tint of a color temperature in Kelvin, interpolated between tabulated tints.

    Raises
    ------
    ianrelight.IANRelightError
        If `temperature` is outside of 2500K to 6500K.
    """

    if not MIN_TEMPERATURE <= temperature <= MAX_TEMPERATURE:
        raise exceptions.IANRelightError(
            f'Color temperature {temperature}K is outside of '
            f'[{MIN_TEMPERATURE}K, {MAX_TEMPERATURE}K]!'
        )

    table = np.asarray(_TINT_RGB)
    r, g, b = (float(np.interp(temperature, _TINT_TEMPERATURES, table[:, i])) for i in range(3))

    return r, g, b

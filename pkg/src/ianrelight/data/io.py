# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Reading and writing images and depth maps as PNG files."""

# Standard library
import logging
from pathlib import Path

# Third party
import numpy as np
from PIL import Image, UnidentifiedImageError

# Local
from ianrelight import exceptions

logger = logging.getLogger(__name__)

MAX_8BIT = 255
MAX_16BIT = 65535


def _open(path: Path) -> Image.Image:
    try:
        img = Image.open(path)
        img.load()
    except FileNotFoundError:
        raise exceptions.DatasetError(f'Image file "{path}" does not exist!') from None
    except (OSError, UnidentifiedImageError) as e:
        raise exceptions.DatasetError(f'Cannot read image "{path}"!\n{e!s}') from None

    return img


def quantize(values: np.ndarray, max_value: int) -> np.ndarray:
    r"""Clamp `values` to [0, 1] and round ``values · max_value`` half away from zero."""

    return np.floor(np.clip(values, 0.0, 1.0) * max_value + 0.5)


def load_image(path: Path) -> np.ndarray:
    r"""Load an 8-bit or 16-bit RGB PNG image.

    Parameters
    ----------
    path : pathlib.Path
        The path to the image.

    Returns
    -------
    numpy.ndarray
        The image of shape [3, H, W] with values in [0, 1] as 64-bit floats.

    Raises
    ------
    ianrelight.DatasetError
        If the file cannot be read or is not an RGB image.
    """

    img = _open(path)
    if img.mode == 'RGB':
        data = np.asarray(img, dtype=np.float64) / MAX_8BIT
    elif img.mode == 'RGBA':
        data = np.asarray(img.convert('RGB'), dtype=np.float64) / MAX_8BIT
    else:
        raise exceptions.DatasetError(
            f'Image "{path}" has mode "{img.mode}", expected an RGB image!'
        )

    return np.ascontiguousarray(data.transpose(2, 0, 1))


def save_image(image: np.ndarray, path: Path) -> None:
    r"""Save an image of shape [3, H, W] with values in [0, 1] as an 8-bit RGB PNG.

    Raises
    ------
    ianrelight.ShapeError
        If `image` does not have shape [3, H, W].
    """

    if image.ndim != 3 or image.shape[0] != 3:  # noqa: PLR2004
        raise exceptions.ShapeError(f'save_image expects shape [3, H, W], got {image.shape}!')

    data = quantize(image.transpose(1, 2, 0), MAX_8BIT).astype(np.uint8)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(data).save(path, format='PNG')


def load_depth(path: Path) -> np.ndarray:
    r"""Load a grayscale depth map, 16-bit or 8-bit.

    Returns
    -------
    numpy.ndarray
        The depth of shape [1, H, W] in [0, 1], 0 being nearest to the camera.

    Raises
    ------
    ianrelight.DatasetError
        If the file cannot be read or is not a grayscale image.
    """

    img = _open(path)
    if img.mode in ('I;16', 'I;16B', 'I;16L', 'I'):
        data = np.asarray(img, dtype=np.float64) / MAX_16BIT
    elif img.mode == 'L':
        data = np.asarray(img, dtype=np.float64) / MAX_8BIT
    else:
        raise exceptions.DatasetError(
            f'Depth map "{path}" has mode "{img.mode}", expected a grayscale image!'
        )

    return np.clip(data, 0.0, 1.0)[None]


def save_depth(depth: np.ndarray, path: Path) -> None:
    r"""Save a depth map of shape [1, H, W] or [H, W] in [0, 1] as a 16-bit grayscale PNG."""

    d = depth[0] if depth.ndim == 3 else depth  # noqa: PLR2004
    if d.ndim != 2:  # noqa: PLR2004
        raise exceptions.ShapeError(f'save_depth expects shape [1, H, W], got {depth.shape}!')

    data = quantize(d, MAX_16BIT).astype(np.uint16)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(data).save(path, format='PNG')

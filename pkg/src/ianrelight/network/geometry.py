# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The geometry guidance derived from depth and the depth-guided geometry encoder."""

# Standard library
import logging
from dataclasses import dataclass

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.config import IANConfig
from ianrelight.nn import ConvWeights, concat_channels, conv2d, relu
from ianrelight.tensor import Tensor, get_default_dtype

logger = logging.getLogger(__name__)

MIN_NORMAL_SIZE = 3


def _as_array(x: Tensor | np.ndarray) -> np.ndarray:
    return x.data if isinstance(x, Tensor) else np.asarray(x)


def normalize_depth(depth: Tensor | np.ndarray) -> Tensor:
    r"""Scale every depth map of [N, 1, H, W] to [0, 1] by its own minimum and maximum.

    A constant depth map becomes all zeros.
    """

    d = _as_array(depth).astype(np.float64)
    low = d.min(axis=(1, 2, 3), keepdims=True)
    span = d.max(axis=(1, 2, 3), keepdims=True) - low
    out = np.divide(d - low, span, out=np.zeros_like(d), where=span > 0)

    return Tensor(out.astype(get_default_dtype()))


def normal_from_depth(depth: Tensor | np.ndarray) -> Tensor:
    r"""Compute unit surface normals from depth maps with central differences.

    The normal of a pixel is ``(dD/dx, dD/dy, -1)`` normalized to unit length, where
    ``dD/dx = (D(x+1, y) - D(x-1, y)) / 2``. The depth is replicated at the borders.

    Parameters
    ----------
    depth : ianrelight.tensor.Tensor or numpy.ndarray
        The depth maps of shape [N, 1, H, W] with H and W >= 3.

    Returns
    -------
    ianrelight.tensor.Tensor
        The normals of shape [N, 3, H, W].

    Raises
    ------
    ianrelight.ShapeError
        If `depth` has the wrong shape or is smaller than 3x3.
    """

    d = _as_array(depth).astype(np.float64)
    if d.ndim != 4 or d.shape[1] != 1:  # noqa: PLR2004
        raise exceptions.ShapeError(f'Depth must have shape [N, 1, H, W], got {d.shape}!')
    if min(d.shape[2:]) < MIN_NORMAL_SIZE:
        raise exceptions.ShapeError(f'Depth must be at least 3x3, got {d.shape[2:]}!')

    padded = np.pad(d[:, 0], ((0, 0), (1, 1), (1, 1)), mode='edge')
    dx = (padded[:, 1:-1, 2:] - padded[:, 1:-1, :-2]) / 2
    dy = (padded[:, 2:, 1:-1] - padded[:, :-2, 1:-1]) / 2

    n = np.stack([dx, dy, -np.ones_like(dx)], axis=1)
    n /= np.linalg.norm(n, axis=1, keepdims=True)

    return Tensor(n.astype(get_default_dtype()))


def linear_positional_encoding(height: int, width: int) -> Tensor:
    r"""The linear positional encoding ``2 · [x / W, y / H] - 1`` of shape [1, 2, H, W].

    Channel 0 holds the encoded column index x and channel 1 the encoded row index y.
    """

    if height < 1 or width < 1:
        raise exceptions.ShapeError(f'Invalid size {height}x{width} for a positional encoding!')

    y, x = np.meshgrid(np.arange(height), np.arange(width), indexing='ij')
    pe = np.stack([2 * x / width - 1, 2 * y / height - 1])[None]

    return Tensor(pe.astype(get_default_dtype()))


@dataclass(slots=True)
class GuidancePack:
    r"""The full-resolution geometry guidance of a batch.

    Parameters
    ----------
    depth : ianrelight.tensor.Tensor
        The normalized depth [N, 1, H, W] in [0, 1].

    normal : ianrelight.tensor.Tensor
        The unit surface normals [N, 3, H, W].

    pe : ianrelight.tensor.Tensor
        The positional encoding [N, 2, H, W] in [-1, 1).
    """

    depth: Tensor
    normal: Tensor
    pe: Tensor

    @property
    def size(self) -> tuple[int, int]:
        r"""The spatial size (H, W) of the guidance."""
        return self.depth.shape[2], self.depth.shape[3]

    def stack(self, use_depth: bool = True, use_normal: bool = True, use_pe: bool = True) -> Tensor:
        r"""Concatenate the selected guidance components in the order depth, normal, pe."""

        selection = ((self.depth, use_depth), (self.normal, use_normal), (self.pe, use_pe))
        parts = [part for part, used in selection if used]
        if not parts:
            raise exceptions.ShapeError('At least one guidance component must be selected!')

        return concat_channels(parts)


def build_guidance(depth: Tensor | np.ndarray) -> GuidancePack:
    r"""Build the guidance of a batch of raw depth maps [N, 1, H, W] in any unit.

    The depth is normalized per image and the normals are computed from the normalized depth.
    """

    d = normalize_depth(depth)
    n, _, h, w = d.shape
    pe = np.broadcast_to(linear_positional_encoding(h, w).data, (n, 2, h, w)).copy()

    return GuidancePack(depth=d, normal=normal_from_depth(d), pe=Tensor(pe))


@dataclass(slots=True)
class DGGEWeights:
    r"""The weights of the five stages of the geometry encoder.

    Parameters
    ----------
    stages : list[tuple[ianrelight.nn.ConvWeights, ianrelight.nn.ConvWeights]]
        The two convolutions of every stage. The first convolution of every stage
        but the first has stride 2.
    """

    stages: list[tuple[ConvWeights, ConvWeights]]

    @property
    def in_channels(self) -> int:
        return self.stages[0][0].in_channels


def dgge_forward(g: GuidancePack, w: DGGEWeights, config: IANConfig) -> list[Tensor]:
    r"""Encode the guidance into features at 1, 1/2, 1/4, 1/8 and 1/16 of its resolution.

    Every stage is ``[ReLU-Conv] x 2``. The guidance itself enters the first convolution
    without an activation.

    Parameters
    ----------
    g : ianrelight.network.GuidancePack
        The full-resolution guidance.

    w : ianrelight.network.DGGEWeights
        The encoder weights.

    config : ianrelight.config.IANConfig
        Selects the guidance components.

    Returns
    -------
    list[ianrelight.tensor.Tensor]
        The features C^0 to C^4.

    Raises
    ------
    ianrelight.ShapeError
        If the selected guidance channels do not match the first convolution.
    """

    x = g.stack(use_depth=config.use_depth, use_normal=config.use_normal, use_pe=config.use_pe)
    if x.shape[1] != w.in_channels:
        raise exceptions.ShapeError(
            f'The guidance has {x.shape[1]} channels but the geometry encoder expects '
            f'{w.in_channels}!'
        )

    features = []
    for k, (conv0, conv1) in enumerate(w.stages):
        x = conv2d(x if k == 0 else relu(x), conv0)
        x = conv2d(relu(x), conv1)
        features.append(x)

    logger.debug(f'DGGE feature sizes: {[f.shape[2:] for f in features]}')

    return features

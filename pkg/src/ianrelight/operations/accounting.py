# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The number of parameters and multiply-accumulates of a network configuration."""

# Standard library
import logging
from collections import defaultdict
from typing import NamedTuple

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.config import IANConfig
from ianrelight.models import BreakdownDataFrameModel
from ianrelight.network import IMAGE_CHANNELS, build_plan
from ianrelight.nn import bicubic_matrix, bilinear_matrix

logger = logging.getLogger(__name__)

MIN_MACS_DIVISOR = 4


class MacsEstimate(NamedTuple):
    r"""The multiply-accumulates of a forward pass of one image.

    Parameters
    ----------
    total : int
        The multiply-accumulates of all convolutions and linear layers.

    resampling : int
        The multiplications of the bilinear and bicubic resampling, not included in `total`.

    breakdown : ianrelight.models.BreakdownDataFrameModel
        The layers, parameters and multiply-accumulates of every module.
    """

    total: int
    resampling: int
    breakdown: BreakdownDataFrameModel


def count_params(config: IANConfig) -> int:
    r"""The exact number of weights and biases of a configuration.

    Disabled components, such as the light projector, contribute nothing.
    """

    return sum(spec.n_params for spec in build_plan(config))


def _separable_mults(channels: int, a_h: np.ndarray, a_w: np.ndarray) -> int:
    r"""The multiplications of ``A_h · x · A_wᵀ`` counting only the nonzero weights."""

    w_in = a_w.shape[1]
    h_out = a_h.shape[0]
    return channels * (np.count_nonzero(a_h) * w_in + h_out * np.count_nonzero(a_w))


def resampling_mults(config: IANConfig, height: int, width: int) -> int:
    r"""The multiplications of all resampling operations of a forward pass of one image."""

    c, levels = config.base_channels, config.levels
    total = 0

    for level in range(levels):
        h, w = height // 2**level, width // 2**level
        coarsest = level == levels - 1

        if level > 0:
            total += _separable_mults(
                IMAGE_CHANNELS, bicubic_matrix(height, h), bicubic_matrix(width, w)
            )
        if not coarsest:
            total += _separable_mults(
                IMAGE_CHANNELS, bicubic_matrix(h // 2, h), bicubic_matrix(w // 2, w)
            )

        for i in (2, 1):
            hi, wi = h // 2**i, w // 2**i
            total += _separable_mults(c, bilinear_matrix(hi), bilinear_matrix(wi))

        if config.use_clsc and not coarsest:
            for i in range(3):
                hi, wi = h // 2 ** (i + 1), w // 2 ** (i + 1)
                total += _separable_mults(c, bilinear_matrix(hi), bilinear_matrix(wi))

    return int(total)


def estimate_macs(config: IANConfig, height: int, width: int) -> MacsEstimate:
    r"""Estimate the multiply-accumulates of relighting one image.

    The headline count is ``k² · C_in · C_out · H_out · W_out`` summed over all convolutions
    plus ``in · out`` over all linear layers. Activations, additions and resampling are
    excluded from it and the resampling multiplications are reported separately.

    Parameters
    ----------
    config : ianrelight.config.IANConfig
        The architecture.

    height : int
        The height of the input image.

    width : int
        The width of the input image.

    Returns
    -------
    ianrelight.operations.MacsEstimate
        The estimate with its breakdown per module.

    Raises
    ------
    ianrelight.ShapeError
        If `height` or `width` is not divisible by 4.
    """

    if height % MIN_MACS_DIVISOR or width % MIN_MACS_DIVISOR:
        raise exceptions.ShapeError(
            f'The image size {height}x{width} must be divisible by {MIN_MACS_DIVISOR}!'
        )

    rows: dict[str, dict[str, int]] = defaultdict(lambda: {'layers': 0, 'params': 0, 'macs': 0})
    for spec in build_plan(config):
        row = rows[spec.module]
        row['layers'] += 1
        row['params'] += spec.n_params
        row['macs'] += spec.macs(height, width)

    breakdown = BreakdownDataFrameModel.from_records(
        [{BreakdownDataFrameModel.c_module: module} | row for module, row in rows.items()]
    )
    total = sum(row['macs'] for row in rows.values())
    resampling = resampling_mults(config, height, width)

    logger.debug(
        f'Estimated {total / 1e9:.2f} GMACs and {resampling / 1e9:.3f} G resampling '
        f'multiplications for {height}x{width}.'
    )

    return MacsEstimate(total=total, resampling=resampling, breakdown=breakdown)


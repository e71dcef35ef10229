# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The layer primitives, initialization and optimizer of the network."""

from ianrelight.nn.functional import (
    STD_EPS,
    channel_std,
    concat_channels,
    conv2d,
    global_avg_pool,
    linear,
    relu,
)
from ianrelight.nn.init import fan_in_and_out, xavier_init, zeros
from ianrelight.nn.optim import Adam, AdamState, adam_step
from ianrelight.nn.params import ConvWeights, LinearWeights
from ianrelight.nn.resample import (
    bicubic_matrix,
    bilinear_matrix,
    gaussian_window_matrix,
    resize_bicubic,
    separable,
    upsample_bilinear2x,
)

# The Public API
__all__ = [
    # functional
    'STD_EPS',
    'channel_std',
    'concat_channels',
    'conv2d',
    'global_avg_pool',
    'linear',
    'relu',
    # init
    'fan_in_and_out',
    'xavier_init',
    'zeros',
    # optim
    'Adam',
    'AdamState',
    'adam_step',
    # params
    'ConvWeights',
    'LinearWeights',
    # resample
    'bicubic_matrix',
    'bilinear_matrix',
    'gaussian_window_matrix',
    'resize_bicubic',
    'separable',
    'upsample_bilinear2x',
]

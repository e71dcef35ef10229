# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The illumination-aware network."""

from ianrelight.network.geometry import (
    DGGEWeights,
    GuidancePack,
    build_guidance,
    dgge_forward,
    linear_positional_encoding,
    normal_from_depth,
    normalize_depth,
)
from ianrelight.network.iarb import (
    Descriptor,
    IARBWeights,
    LightProjectorWeights,
    dilated_branches,
    extract_descriptors,
    iarb_forward,
    project_light,
)
from ianrelight.network.plan import (
    IMAGE_CHANNELS,
    KERNEL_SIZE,
    SH_COEFFICIENTS,
    LayerKind,
    LayerSpec,
    block_layers,
    build_plan,
    decoder_layers,
    dgge_layers,
    encoder_layers,
    level_layers,
    parameter_names,
    projector_layers,
)
from ianrelight.network.pyramid import (
    IANetwork,
    LevelWeights,
    build_network,
    decoder_forward,
    encoder_forward,
    init_layers,
    relight,
    select_guidance,
)

# The Public API
__all__ = [
    # geometry
    'DGGEWeights',
    'GuidancePack',
    'build_guidance',
    'dgge_forward',
    'linear_positional_encoding',
    'normal_from_depth',
    'normalize_depth',
    # iarb
    'Descriptor',
    'IARBWeights',
    'LightProjectorWeights',
    'dilated_branches',
    'extract_descriptors',
    'iarb_forward',
    'project_light',
    # plan
    'IMAGE_CHANNELS',
    'KERNEL_SIZE',
    'SH_COEFFICIENTS',
    'LayerKind',
    'LayerSpec',
    'block_layers',
    'build_plan',
    'decoder_layers',
    'dgge_layers',
    'encoder_layers',
    'level_layers',
    'parameter_names',
    'projector_layers',
    # pyramid
    'IANetwork',
    'LevelWeights',
    'build_network',
    'decoder_forward',
    'encoder_forward',
    'init_layers',
    'relight',
    'select_guidance',
]

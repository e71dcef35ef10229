# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""IANRelight - Image relighting with an illumination-aware network

IANRelight relights an image of a scene to a new illumination with a coarse-to-fine pyramid
network, optionally guided by a depth map and conditioned on a target light. It includes
the autograd engine the network is trained with, a synthetic scene renderer for generating
training pairs, and tools for training, evaluation and inference.
"""

# Local
from ianrelight.config import IANConfig, RunConfig, load_config
from ianrelight.core import OperationResult
from ianrelight.exceptions import (
    CheckpointError,
    ConfigError,
    ConfigFileNotFoundError,
    DatasetError,
    IANRelightError,
    ParseConfigError,
    ShapeError,
    TensorError,
)
from ianrelight.metadata import (
    __releasedate__,
    __version__,
    __versiontuple__,
)
from ianrelight.network import IANetwork, build_network, relight
from ianrelight.operations import load_checkpoint, save_checkpoint

# The Public API
__all__ = [
    # config
    'IANConfig',
    'RunConfig',
    'load_config',
    # core
    'OperationResult',
    # exceptions
    'CheckpointError',
    'ConfigError',
    'ConfigFileNotFoundError',
    'DatasetError',
    'IANRelightError',
    'ParseConfigError',
    'ShapeError',
    'TensorError',
    # metadata
    '__releasedate__',
    '__version__',
    '__versiontuple__',
    # network
    'IANetwork',
    'build_network',
    'relight',
    # operations
    'load_checkpoint',
    'save_checkpoint',
]

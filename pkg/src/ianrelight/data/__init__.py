# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Image I/O, spherical harmonic lighting, the synthetic scene renderer and datasets."""

from ianrelight.data.dataset import (
    DEPTH_DIR,
    INPUT_DIR,
    TARGET_DIR,
    Batch,
    RelightDataset,
    ScenePair,
    check_compatibility,
    check_writable_directory,
    describe_light,
    gen_dataset,
    hflip_pair,
    iterate_batches,
    light_record,
    load_batch,
    load_dataset,
    load_paired_directory,
    mirror_light,
)
from ianrelight.data.io import load_depth, load_image, quantize, save_depth, save_image
from ianrelight.data.render import (
    GEOMETRY_QUANTUM,
    Rendering,
    mirror_scene,
    quantize_geometry,
    random_scene,
    render_lambertian,
)
from ianrelight.data.sh import (
    BAND_FACTORS,
    angles_from_direction,
    direction_from_angles,
    irradiance,
    mirror_direction,
    rotate_azimuth,
    sh_basis,
    sh_from_direction,
    sh_numeric_oracle,
    temperature_tint,
)

# The Public API
__all__ = [
    # dataset
    'DEPTH_DIR',
    'INPUT_DIR',
    'TARGET_DIR',
    'Batch',
    'RelightDataset',
    'ScenePair',
    'check_compatibility',
    'check_writable_directory',
    'describe_light',
    'gen_dataset',
    'hflip_pair',
    'iterate_batches',
    'light_record',
    'load_batch',
    'load_dataset',
    'load_paired_directory',
    'mirror_light',
    # io
    'load_depth',
    'load_image',
    'quantize',
    'save_depth',
    'save_image',
    # render
    'GEOMETRY_QUANTUM',
    'Rendering',
    'mirror_scene',
    'quantize_geometry',
    'random_scene',
    'render_lambertian',
    # sh
    'BAND_FACTORS',
    'angles_from_direction',
    'direction_from_angles',
    'irradiance',
    'mirror_direction',
    'rotate_azimuth',
    'sh_basis',
    'sh_from_direction',
    'sh_numeric_oracle',
    'temperature_tint',
]

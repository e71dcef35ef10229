# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The data models of IANRelight."""

from ianrelight.models.checkpoint import AdamHeader, ArrayEntry, CheckpointHeader
from ianrelight.models.core import BaseDataFrameModel, BaseModel, ColumnList, DtypeMapping
from ianrelight.models.light import SH_ORDER, LightRecord, SHLight
from ianrelight.models.manifest import (
    MANIFEST_FILENAME,
    SCHEMA_VERSION,
    Manifest,
    ManifestRecord,
)
from ianrelight.models.report import ReportEntry, TrainReport
from ianrelight.models.scene import Scene, Sphere
from ianrelight.models.tables import BreakdownDataFrameModel, MetricsDataFrameModel

# The Public API
__all__ = [
    # checkpoint
    'AdamHeader',
    'ArrayEntry',
    'CheckpointHeader',
    # core
    'BaseDataFrameModel',
    'BaseModel',
    'ColumnList',
    'DtypeMapping',
    # light
    'SH_ORDER',
    'LightRecord',
    'SHLight',
    # manifest
    'MANIFEST_FILENAME',
    'SCHEMA_VERSION',
    'Manifest',
    'ManifestRecord',
    # report
    'ReportEntry',
    'TrainReport',
    # scene
    'Scene',
    'Sphere',
    # tables
    'BreakdownDataFrameModel',
    'MetricsDataFrameModel',
]

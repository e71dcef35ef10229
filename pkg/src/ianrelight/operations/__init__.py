# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Training, evaluation, accounting and checkpoints."""

from ianrelight.operations.accounting import (
    MacsEstimate,
    count_params,
    estimate_macs,
    resampling_mults,
)
from ianrelight.operations.checkpoint import (
    FORMAT_VERSION,
    MAGIC,
    Checkpoint,
    load_checkpoint,
    read_header,
    save_checkpoint,
)
from ianrelight.operations.evaluate import evaluate, metrics_table
from ianrelight.operations.gradcheck import run_gradcheck_suite
from ianrelight.operations.train import TrainResult, split_holdout, train, train_step

# The Public API
__all__ = [
    # accounting
    'MacsEstimate',
    'count_params',
    'estimate_macs',
    'resampling_mults',
    # checkpoint
    'FORMAT_VERSION',
    'MAGIC',
    'Checkpoint',
    'load_checkpoint',
    'read_header',
    'save_checkpoint',
    # evaluate
    'evaluate',
    'metrics_table',
    # gradcheck
    'run_gradcheck_suite',
    # train
    'TrainResult',
    'split_holdout',
    'train',
    'train_step',
]

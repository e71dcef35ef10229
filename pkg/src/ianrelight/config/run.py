# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The parameters of a training run."""

# Standard library
from pathlib import Path
from typing import Self

# Third party
from pydantic import Field, PositiveFloat, model_validator

# Local
from ianrelight.config.core import BaseConfigModel


class TrainParams(BaseConfigModel):
    r"""The parameters of a training run.

    Parameters
    ----------
    iterations : int, default 2000
        The number of optimizer steps.

    batch_size : int, default 5
        The number of scene pairs per step.

    lr : float, default 1e-4
        The constant learning rate of Adam.

    betas : tuple[float, float], default (0.9, 0.999)
        The decay rates of the first and second moments of Adam.

    eps : float, default 1e-8
        The stabilizing constant of Adam.

    seed : int, default 0
        The seed of the weight initialization and the batch order.

    log_interval : int, default 10
        Log and report the loss every `log_interval` iterations.

    eval_interval : int, default 500
        Evaluate on the held-out records every `eval_interval` iterations. 0 disables it.

    holdout : int, default 20
        The number of records at the end of the dataset reserved for evaluation.

    augment : bool, default False
        True if pairs are flipped horizontally with a probability of 50 %.

    num_workers : int, default 0
        The number of background threads loading batches. 0 loads in the calling thread.

    data_dir : pathlib.Path or None, default None
        The directory of the dataset to train on.

    checkpoint_path : pathlib.Path, default Path('model.ianckpt')
        Where the trained checkpoint is saved.

    report_path : pathlib.Path or None, default None
        The JSON-lines training report. If None it is written next to
        `checkpoint_path` with the suffix ".jsonl".
    """

    iterations: int = Field(default=2000, ge=0)
    batch_size: int = Field(default=5, ge=1)
    lr: PositiveFloat = 1e-4
    betas: tuple[float, float] = (0.9, 0.999)
    eps: PositiveFloat = 1e-8
    seed: int = 0
    log_interval: int = Field(default=10, ge=1)
    eval_interval: int = Field(default=500, ge=0)
    holdout: int = Field(default=20, ge=0)
    augment: bool = False
    num_workers: int = Field(default=0, ge=0)
    data_dir: Path | None = None
    checkpoint_path: Path = Path('model.ianckpt')
    report_path: Path | None = None

    @model_validator(mode='after')
    def validate_betas(self) -> Self:
        r"""Validate that the moment decay rates are in [0, 1)."""

        if not all(0 <= b < 1 for b in self.betas):
            raise ValueError(f'betas must be in [0, 1), got {self.betas}!')
        return self

    @property
    def resolved_report_path(self) -> Path:
        r"""The path of the training report."""

        if self.report_path is not None:
            return self.report_path
        return self.checkpoint_path.with_suffix('.jsonl')

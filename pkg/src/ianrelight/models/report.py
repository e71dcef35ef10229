# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The report of a training run."""

# Standard library
from pathlib import Path

# Third party
from pydantic import NonNegativeFloat, NonNegativeInt

# Local
from ianrelight import exceptions
from ianrelight.models.core import BaseModel


class ReportEntry(BaseModel):
    r"""The state of a training run at a log interval.

    Parameters
    ----------
    iteration : int
        The number of completed optimizer steps.

    loss : float
        The total loss of the last batch.

    ema_loss : float
        The exponential moving average of the loss.

    elapsed : float
        The wall-clock seconds since the start of the run.

    eval_psnr : float or None, default None
        The mean PSNR on the held-out pairs if evaluated at this iteration.

    eval_ssim : float or None, default None
        The mean RGB SSIM on the held-out pairs if evaluated at this iteration.
    """

    iteration: NonNegativeInt
    loss: float
    ema_loss: float
    elapsed: NonNegativeFloat
    eval_psnr: float | None = None
    eval_ssim: float | None = None


class TrainReport:
    r"""The entries of a training run in order of increasing iteration.

    Parameters
    ----------
    path : pathlib.Path or None, default None
        A JSON lines file every added entry is appended to.

    append : bool, default False
        False to truncate the file at `path` on creation.
    """

    def __init__(self, path: Path | None = None, append: bool = False) -> None:
        self.entries: list[ReportEntry] = []
        self.path = path
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            if not append or not path.exists():
                path.write_text('', encoding='utf-8')

    def __len__(self) -> int:
        return len(self.entries)

    def add(self, entry: ReportEntry) -> None:
        r"""Add an entry.

        Raises
        ------
        ianrelight.IANRelightError
            If the iteration of `entry` is not larger than the iteration of the last entry.
        """

        if self.entries and entry.iteration <= self.entries[-1].iteration:
            raise exceptions.IANRelightError(
                f'Report iterations must increase: {entry.iteration} after '
                f'{self.entries[-1].iteration}!'
            )

        self.entries.append(entry)
        if self.path is not None:
            with self.path.open('a', encoding='utf-8') as f:
                f.write(entry.model_dump_json() + '\n')

    @property
    def last(self) -> ReportEntry | None:
        return self.entries[-1] if self.entries else None

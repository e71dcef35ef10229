# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Unit tests for the modules models.report and models.tables."""

# ruff: noqa: PLR2004

# Standard library
import json
from pathlib import Path

# Third party
import pandas as pd
import pytest

# Local
from ianrelight import exceptions
from ianrelight.models import MetricsDataFrameModel, ReportEntry, TrainReport


class TestTrainReport:
    r"""Tests for the class `ianrelight.models.TrainReport`."""

    def test_entries_are_appended_to_the_file(self, tmp_path: Path) -> None:
        r"""Test that every added entry is written as a JSON line."""

        # Setup
        # ===========================================================
        path = tmp_path / 'runs' / 'report.jsonl'
        report = TrainReport(path)

        # Exercise
        # ===========================================================
        report.add(ReportEntry(iteration=10, loss=0.5, ema_loss=0.6, elapsed=1.0))
        report.add(
            ReportEntry(iteration=20, loss=0.4, ema_loss=0.5, elapsed=2.0, eval_psnr=25.0)
        )

        # Verify
        # ===========================================================
        lines = path.read_text(encoding='utf-8').splitlines()
        assert len(report) == 2
        assert report.last.iteration == 20  # type: ignore[union-attr]
        assert [json.loads(line)['iteration'] for line in lines] == [10, 20]
        assert json.loads(lines[1])['eval_psnr'] == 25.0

        # Clean up - None
        # ===========================================================

    @pytest.mark.parametrize(('append', 'lines_exp'), [(False, 1), (True, 2)])
    def test_append(self, append: bool, lines_exp: int, tmp_path: Path) -> None:
        r"""Test that an existing report is truncated unless appending."""

        # Setup
        # ===========================================================
        path = tmp_path / 'report.jsonl'
        TrainReport(path).add(ReportEntry(iteration=1, loss=1.0, ema_loss=1.0, elapsed=0.1))

        # Exercise
        # ===========================================================
        report = TrainReport(path, append=append)
        report.add(ReportEntry(iteration=2, loss=1.0, ema_loss=1.0, elapsed=0.2))

        # Verify
        # ===========================================================
        assert len(path.read_text(encoding='utf-8').splitlines()) == lines_exp

        # Clean up - None
        # ===========================================================

    @pytest.mark.raises
    def test_iterations_must_increase(self) -> None:
        r"""Test that an entry with a non-increasing iteration raises IANRelightError."""

        # Setup
        # ===========================================================
        report = TrainReport()
        report.add(ReportEntry(iteration=5, loss=1.0, ema_loss=1.0, elapsed=0.0))

        # Exercise
        # ===========================================================
        with pytest.raises(exceptions.IANRelightError) as exc_info:
            report.add(ReportEntry(iteration=5, loss=1.0, ema_loss=1.0, elapsed=0.0))

        # Verify
        # ===========================================================
        assert 'Report iterations must increase: 5 after 5!' in exc_info.exconly()

        # Clean up - None
        # ===========================================================


class TestMetricsDataFrameModel:
    r"""Tests for the model `ianrelight.models.MetricsDataFrameModel`."""

    def test_from_records(self) -> None:
        r"""Test the columns, the index and the mean row."""

        # Setup
        # ===========================================================
        row = {
            'psnr': 30.0,
            'ssim_rgb': 0.9,
            'ssim_luma': 0.95,
            'copy_psnr': 20.0,
            'copy_ssim_rgb': 0.7,
            'copy_ssim_luma': 0.8,
        }
        records = [{'image': 'a'} | row, {'image': 'mean'} | row]

        # Exercise
        # ===========================================================
        model = MetricsDataFrameModel.from_records(records)

        # Verify
        # ===========================================================
        assert model.shape == (2, 6)
        assert model.index.name == 'image'
        assert model.col_dtypes['psnr'] == 'float64'
        assert model.mean == row
        pd.testing.assert_index_equal(
            model.index, pd.Index(['a', 'mean'], dtype='string', name='image')
        )

        # Clean up - None
        # ===========================================================

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Evaluation of a network on a dataset against the copy baseline."""

# Standard library
import logging
from collections.abc import Sequence
from pathlib import Path

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.data import RelightDataset, check_compatibility, iterate_batches
from ianrelight.metrics import psnr, ssim_luma, ssim_rgb
from ianrelight.models import MetricsDataFrameModel
from ianrelight.network import IANetwork, relight

logger = logging.getLogger(__name__)

M = MetricsDataFrameModel


def metrics_table(
    names: Sequence[str],
    outputs: Sequence[np.ndarray],
    targets: Sequence[np.ndarray],
    inputs: Sequence[np.ndarray],
) -> MetricsDataFrameModel:
    r"""Compute the metrics of relit images and of their inputs against the targets.

    Parameters
    ----------
    names : Sequence[str]
        The name of every image.

    outputs : Sequence[numpy.ndarray]
        The relit images [3, H, W].

    targets : Sequence[numpy.ndarray]
        The target images [3, H, W].

    inputs : Sequence[numpy.ndarray]
        The input images [3, H, W], the copy baseline.

    Returns
    -------
    ianrelight.models.MetricsDataFrameModel
        One row per image followed by the mean row.
    """

    rows = []
    for name, out, gt, inp in zip(names, outputs, targets, inputs, strict=True):
        rows.append(
            {
                M.c_image: name,
                M.c_psnr: psnr(out, gt),
                M.c_ssim_rgb: ssim_rgb(out, gt),
                M.c_ssim_luma: ssim_luma(out, gt),
                M.c_copy_psnr: psnr(inp, gt),
                M.c_copy_ssim_rgb: ssim_rgb(inp, gt),
                M.c_copy_ssim_luma: ssim_luma(inp, gt),
            }
        )

    if rows:
        mean = {col: float(np.mean([r[col] for r in rows])) for col in M.dtypes if col != M.c_image}
        rows.append({M.c_image: M.MEAN_LABEL} | mean)

    return M.from_records(rows)


def evaluate(
    model: IANetwork, dataset: RelightDataset, batch_size: int = 5, num_workers: int = 0
) -> MetricsDataFrameModel:
    r"""Evaluate the clamped full-resolution outputs of a network on a dataset.

    Parameters
    ----------
    model : ianrelight.network.IANetwork
        The network.

    dataset : ianrelight.data.RelightDataset
        The dataset.

    batch_size : int, default 5
        The number of pairs relit at once.

    num_workers : int, default 0
        The number of background threads loading the pairs.

    Returns
    -------
    ianrelight.models.MetricsDataFrameModel
        The PSNR and SSIM of every pair and their mean, for the network and the copy baseline.

    Raises
    ------
    ianrelight.DatasetError
        If the dataset does not provide the depth or the lights the network requires.
    """

    result = check_compatibility(dataset, model.config)
    if not result.ok:
        raise exceptions.DatasetError(result.short_msg, data=result)

    names, outputs, targets, inputs = [], [], [], []
    batches = iterate_batches(
        dataset, batch_size=batch_size, shuffle=False, epochs=1, num_workers=num_workers
    )
    for batch in batches:
        relit = relight(
            model,
            batch.inputs,
            depth=batch.depths if model.config.use_dgge else None,
            light=batch.lights if model.config.use_light_projector else None,
        )[-1]
        names.extend(Path(dataset.records[i].input).name for i in batch.indices)
        outputs.extend(relit)
        targets.extend(batch.targets)
        inputs.extend(batch.inputs)

    table = metrics_table(names, outputs, targets, inputs)
    mean = table.mean
    logger.info(
        f'Evaluated {len(dataset)} pairs: PSNR {mean[M.c_psnr]:.2f} dB '
        f'(copy {mean[M.c_copy_psnr]:.2f} dB), SSIM {mean[M.c_ssim_rgb]:.4f}.'
    )

    return table

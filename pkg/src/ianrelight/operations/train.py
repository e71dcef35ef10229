# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The training loop."""

# Standard library
import logging
import math
import time
from dataclasses import dataclass

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.config import LossWeights, RunConfig
from ianrelight.data import Batch, RelightDataset, check_compatibility, iterate_batches
from ianrelight.losses import pyramid_targets, total_loss
from ianrelight.models import MetricsDataFrameModel, ReportEntry, TrainReport
from ianrelight.network import IANetwork, build_guidance, build_network
from ianrelight.nn import Adam
from ianrelight.operations.checkpoint import Checkpoint
from ianrelight.operations.evaluate import evaluate
from ianrelight.tensor import Tensor, backward

logger = logging.getLogger(__name__)

EMA_DECAY = 0.9


@dataclass(slots=True)
class TrainResult:
    r"""The result of a training run.

    Parameters
    ----------
    checkpoint : ianrelight.operations.Checkpoint
        The trained network and the state of the run.

    report : ianrelight.models.TrainReport
        The report entries of every log interval.

    metrics : ianrelight.models.MetricsDataFrameModel or None
        The final metrics on the held-out pairs. None if no pairs were held out.
    """

    checkpoint: Checkpoint
    report: TrainReport
    metrics: MetricsDataFrameModel | None = None


def split_holdout(
    dataset: RelightDataset, holdout: int
) -> tuple[RelightDataset, RelightDataset | None]:
    r"""Split off the last `holdout` pairs of a dataset for evaluation.

    At least one pair is kept for training.
    """

    n = len(dataset)
    n_eval = min(holdout, n - 1)
    if n_eval <= 0:
        return dataset, None

    return dataset.subset(range(n - n_eval)), dataset.subset(range(n - n_eval, n))


def train_step(model: IANetwork, optimizer: Adam, batch: Batch, weights: LossWeights) -> float:
    r"""Run one optimizer step on a batch and return the loss before the step.

    Raises
    ------
    ianrelight.TensorError
        If the loss is not finite.
    """

    config = model.config
    image = Tensor(batch.inputs, dtype=model.dtype)
    guidance = build_guidance(batch.depths) if config.use_dgge else None
    light = batch.lights if config.use_light_projector else None

    outputs = model(image, guidance=guidance, light=light)
    gts = pyramid_targets(Tensor(batch.targets, dtype=model.dtype), config.levels)
    loss = total_loss(outputs, gts, weights)

    value = loss.item()
    if not math.isfinite(value):
        raise exceptions.TensorError(f'The training loss diverged to {value}!')

    optimizer.zero_grad()
    backward(loss)
    optimizer.step()

    return value


def train(
    config: RunConfig, dataset: RelightDataset, resume: Checkpoint | None = None
) -> TrainResult:
    r"""Train a network with Adam on the total loss.

    The last `config.run.holdout` pairs are never seen by the optimizer and are used for the
    evaluation at every `eval_interval` and at the end of the run. Every `log_interval`
    iterations an entry with the loss and its moving average is added to the report.

    Parameters
    ----------
    config : ianrelight.config.RunConfig
        The architecture, the loss weights and the run parameters.

    dataset : ianrelight.data.RelightDataset
        The training pairs including the held-out pairs.

    resume : ianrelight.operations.Checkpoint or None, default None
        A checkpoint to continue training from. The network and the optimizer state are
        restored and the batch order continues from a new epoch.

    Returns
    -------
    ianrelight.operations.TrainResult
        The checkpoint after `config.run.iterations` iterations and the report.

    Raises
    ------
    ianrelight.DatasetError
        If the dataset does not match the configuration. Raised before any step.

    ianrelight.CheckpointError
        If `resume` has a different architecture than `config.model`.
    """

    run = config.run
    result = check_compatibility(dataset, config.model)
    if not result.ok:
        raise exceptions.DatasetError(result.short_msg, data=result)

    train_ds, eval_ds = split_holdout(dataset, run.holdout)
    rng = np.random.default_rng(run.seed)

    if resume is None:
        model, state, start = build_network(config.model, seed=run.seed), None, 0
    else:
        if resume.model.config != config.model:
            raise exceptions.CheckpointError(
                'The architecture of the checkpoint differs from the configured model!'
            )
        model, state, start = resume.model, resume.adam, resume.iteration
        if resume.rng_state is not None:
            rng.bit_generator.state = resume.rng_state

    optimizer = Adam(model.parameters(), lr=run.lr, betas=run.betas, eps=run.eps, state=state)
    report = TrainReport(path=run.resolved_report_path, append=resume is not None)

    logger.info(
        f'Training {model.n_params} parameters on {len(train_ds)} pairs '
        f'for iterations {start + 1} to {run.iterations}.'
    )

    batches = iterate_batches(
        train_ds,
        batch_size=run.batch_size,
        seed=rng,
        augment=run.augment,
        num_workers=run.num_workers,
    )
    t0 = time.perf_counter()
    ema: float | None = None
    metrics = None

    try:
        for it in range(start + 1, run.iterations + 1):
            loss = train_step(model, optimizer, next(batches), config.loss)
            ema = loss if ema is None else EMA_DECAY * ema + (1 - EMA_DECAY) * loss

            last = it == run.iterations
            if it % run.log_interval and not last:
                continue

            eval_psnr = eval_ssim = None
            due = last or (run.eval_interval and it % run.eval_interval == 0)
            if eval_ds is not None and due:
                metrics = evaluate(model, eval_ds, batch_size=run.batch_size)
                eval_psnr = metrics.mean[metrics.c_psnr]
                eval_ssim = metrics.mean[metrics.c_ssim_rgb]

            entry = ReportEntry(
                iteration=it,
                loss=loss,
                ema_loss=ema,
                elapsed=time.perf_counter() - t0,
                eval_psnr=eval_psnr,
                eval_ssim=eval_ssim,
            )
            report.add(entry)
            logger.info(
                f'Iteration {it}/{run.iterations}: loss {loss:.5f} (ema {ema:.5f})'
                + ('' if eval_psnr is None else f', held-out PSNR {eval_psnr:.2f} dB')
            )
    finally:
        batches.close()

    checkpoint = Checkpoint(
        model=model,
        iteration=max(start, run.iterations),
        adam=optimizer.state,
        rng_state=rng.bit_generator.state,
        run=config.to_dict(),
    )

    return TrainResult(checkpoint=checkpoint, report=report, metrics=metrics)

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The sub-command `train` that trains a network on a dataset."""

# Standard library
from pathlib import Path

# Third party
import click

# Local
from ianrelight.cli.core import echo_config, echo_with_log, exit_program, load_resources
from ianrelight.cli.display import display_dataframe
from ianrelight.data import load_dataset
from ianrelight.exceptions import IANRelightError
from ianrelight.operations import load_checkpoint, save_checkpoint, train as train_network

EXISTING_DIR = click.Path(exists=True, file_okay=False, dir_okay=True, path_type=Path)
EXISTING_FILE = click.Path(exists=True, file_okay=True, dir_okay=False, path_type=Path)


@click.command(name='train')
@click.option('--data', 'data_dir', type=EXISTING_DIR, help='The directory of the dataset.')
@click.option('--iterations', type=click.IntRange(min=0), help='The number of optimizer steps.')
@click.option('--seed', type=int, help='The seed of the initialization and the batch order.')
@click.option(
    '--ckpt',
    'checkpoint_path',
    type=click.Path(dir_okay=False, path_type=Path),
    help='Where to save the trained checkpoint.',
)
@click.option('--resume', type=EXISTING_FILE, help='A checkpoint to continue training from.')
@click.pass_context
def train(
    ctx: click.Context,
    data_dir: Path | None,
    iterations: int | None,
    seed: int | None,
    checkpoint_path: Path | None,
    resume: Path | None,
) -> None:
    r"""Train a network on a generated dataset"""

    cm = load_resources(
        ctx,
        overrides={
            'run': {
                'data_dir': data_dir,
                'iterations': iterations,
                'seed': seed,
                'checkpoint_path': checkpoint_path,
            }
        },
    )
    echo_config(cm)

    run = cm.run
    if run.data_dir is None:
        exit_program(
            error=True, ctx=ctx, message='No dataset given! Use --data or set "run.data_dir".'
        )

    try:
        dataset = load_dataset(run.data_dir)
        checkpoint = None if resume is None else load_checkpoint(resume, config=cm.model)
        result = train_network(cm, dataset, resume=checkpoint)
        path = save_checkpoint(result.checkpoint, run.checkpoint_path)
    except IANRelightError as e:
        exit_program(error=True, ctx=ctx, message=f'Error training the network!\n{e!s}')

    if result.metrics is not None:
        echo_with_log('Metrics of the held-out pairs:')
        display_dataframe(result.metrics.df)

    last = result.report.last
    loss_msg = '' if last is None else f' with a final loss of {last.loss:.5f}'
    exit_program(
        error=False,
        ctx=ctx,
        message=(
            f'Successfully trained {result.checkpoint.iteration} iterations{loss_msg}, '
            f'saved to "{path}"!'
        ),
    )

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The sub-command `eval` that computes the metrics of a trained network on a dataset."""

# Standard library
from pathlib import Path

# Third party
import click

# Local
from ianrelight.cli.core import echo_config, exit_program, load_resources
from ianrelight.cli.display import display_dataframe
from ianrelight.cli.train import EXISTING_DIR, EXISTING_FILE
from ianrelight.data import RelightDataset, load_dataset, load_paired_directory
from ianrelight.exceptions import IANRelightError
from ianrelight.operations import evaluate, load_checkpoint


@click.command(name='eval')
@click.option(
    '--ckpt', 'checkpoint_path', required=True, type=EXISTING_FILE, help='The checkpoint.'
)
@click.option(
    '--data', 'data_dir', type=EXISTING_DIR, help='The directory of a dataset with a manifest.'
)
@click.option(
    '--inputs',
    'input_dir',
    type=EXISTING_DIR,
    help='A directory of input PNGs paired by name with --targets.',
)
@click.option('--targets', 'target_dir', type=EXISTING_DIR, help='A directory of target PNGs.')
@click.option('--depths', 'depth_dir', type=EXISTING_DIR, help='A directory of depth PNGs.')
@click.option(
    '--out',
    type=click.Path(dir_okay=False, path_type=Path),
    help='Write the metrics table to this CSV file.',
)
@click.pass_context
def evaluate_(
    ctx: click.Context,
    checkpoint_path: Path,
    data_dir: Path | None,
    input_dir: Path | None,
    target_dir: Path | None,
    depth_dir: Path | None,
    out: Path | None,
) -> None:
    r"""Evaluate the PSNR and SSIM of a trained network and of the copy baseline"""

    cm = load_resources(ctx)
    echo_config(cm)

    paired = input_dir is not None or target_dir is not None
    if (data_dir is None) == paired or (paired and (input_dir is None or target_dir is None)):
        raise click.UsageError('Specify either --data or both --inputs and --targets!', ctx=ctx)

    try:
        model = load_checkpoint(checkpoint_path).model
        dataset: RelightDataset
        if data_dir is not None:
            dataset = load_dataset(data_dir)
        else:
            dataset = load_paired_directory(
                input_dir,  # type: ignore[arg-type]
                target_dir,  # type: ignore[arg-type]
                depth_dir=depth_dir,
            )
        table = evaluate(
            model, dataset, batch_size=cm.run.batch_size, num_workers=cm.run.num_workers
        )
    except IANRelightError as e:
        exit_program(error=True, ctx=ctx, message=f'Error evaluating the network!\n{e!s}')

    display_dataframe(table.df)
    if out is not None:
        table.df.to_csv(out)

    mean = table.mean
    exit_program(
        error=False,
        ctx=ctx,
        message=(
            f'Evaluated {len(dataset)} pairs: PSNR {mean[table.c_psnr]:.2f} dB '
            f'(copy baseline {mean[table.c_copy_psnr]:.2f} dB)'
        ),
    )

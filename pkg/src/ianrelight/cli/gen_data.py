# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The sub-command `gen-data` that renders a synthetic dataset."""

# Standard library
from pathlib import Path

# Third party
import click

# Local
from ianrelight.cli.core import echo_config, exit_program, load_resources
from ianrelight.config import LightPolicy
from ianrelight.data import check_writable_directory, gen_dataset
from ianrelight.exceptions import IANRelightError


@click.command(name='gen-data')
@click.option(
    '--out',
    'out_dir',
    required=True,
    type=click.Path(file_okay=False, dir_okay=True, path_type=Path),
    help='The directory to write the dataset to.',
)
@click.option('--count', type=click.IntRange(min=1), help='The number of scene pairs.')
@click.option('--size', type=click.IntRange(min=16), help='The height and width of the images.')
@click.option('--seed', type=int, help='The seed of the scenes and the lights.')
@click.option(
    '--policy',
    type=click.Choice([p.value for p in LightPolicy]),
    help='Render every pair with the same light pair (fixed) or with random lights (random).',
)
@click.pass_context
def gen_data(
    ctx: click.Context,
    out_dir: Path,
    count: int | None,
    size: int | None,
    seed: int | None,
    policy: str | None,
) -> None:
    r"""Render a synthetic dataset of relighting pairs"""

    cm = load_resources(
        ctx, overrides={'data': {'count': count, 'size': size, 'seed': seed, 'policy': policy}}
    )
    echo_config(cm)

    result = check_writable_directory(out_dir)
    if not result.ok:
        exit_program(error=True, ctx=ctx, message=result.short_msg)

    try:
        manifest = gen_dataset(cm.data, out_dir=out_dir)
    except IANRelightError as e:
        exit_program(error=True, ctx=ctx, message=f'Error generating the dataset!\n{e!s}')

    exit_program(
        error=False,
        ctx=ctx,
        message=(
            f'Successfully generated {manifest.count} pairs of policy "{manifest.policy}" '
            f'in "{out_dir}"!'
        ),
    )

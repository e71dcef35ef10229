# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The sub-command `info` that reports the parameters and the cost of the configured network."""

# Third party
import click

# Local
from ianrelight.cli.core import echo_config, echo_with_log, exit_program, load_resources
from ianrelight.cli.display import display_dataframe
from ianrelight.exceptions import IANRelightError
from ianrelight.operations import count_params, estimate_macs

GIGA = 1e9


@click.command(name='info')
@click.option(
    '--size',
    type=click.IntRange(min=1),
    help='The height and width of the input. Defaults to "model.image_size" or "data.size".',
)
@click.pass_context
def info(ctx: click.Context, size: int | None) -> None:
    r"""Show the parameter count and the multiply-accumulates of the configured network"""

    cm = load_resources(ctx)
    echo_config(cm)

    config = cm.model
    _size = size or config.image_size or cm.data.size

    try:
        estimate = estimate_macs(config, _size, _size)
    except IANRelightError as e:
        exit_program(error=True, ctx=ctx, message=str(e))

    display_dataframe(estimate.breakdown.df)
    echo_with_log(f'Parameters : {count_params(config)}')
    giga_macs = estimate.total / GIGA
    echo_with_log(f'MACs       : {estimate.total} ({giga_macs:.2f} G) at {_size}x{_size}')
    echo_with_log(f'Resampling : {estimate.resampling} multiplications (not included in MACs)')

    exit_program(error=False, ctx=ctx)

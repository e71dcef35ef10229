# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The sub-command `gradcheck` that verifies the gradients with finite differences."""

# Standard library
import time

# Third party
import click

# Local
from ianrelight.cli.core import echo_config, exit_program, load_resources
from ianrelight.cli.display import display_dataframe, gradcheck_dataframe
from ianrelight.operations import run_gradcheck_suite


@click.command(name='gradcheck')
@click.option(
    '--seed', type=int, default=0, show_default=True, help='The seed of the random inputs.'
)
@click.pass_context
def gradcheck(ctx: click.Context, seed: int) -> None:
    r"""Compare the analytic gradients with finite differences in 64-bit precision"""

    cm = load_resources(ctx)
    echo_config(cm)

    t0 = time.perf_counter()
    results = run_gradcheck_suite(seed=seed)
    elapsed = time.perf_counter() - t0

    display_dataframe(gradcheck_dataframe(results))

    if failed := [r.name for r in results if not r.passed]:
        message = f'{len(failed)} gradient check(s) failed: {", ".join(failed)}'
        exit_program(error=True, ctx=ctx, message=message)

    message = f'All {len(results)} gradient checks passed in {elapsed:.1f} s!'
    exit_program(error=False, ctx=ctx, message=message)

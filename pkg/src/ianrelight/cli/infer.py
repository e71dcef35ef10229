# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The sub-command `infer` that relights an image with a trained network."""

# Standard library
import logging
from pathlib import Path

# Third party
import click
import numpy as np

# Local
from ianrelight.cli.core import Color, echo_config, echo_with_log, exit_program, load_resources
from ianrelight.cli.train import EXISTING_FILE
from ianrelight.data import load_depth, load_image, save_image
from ianrelight.exceptions import IANRelightError
from ianrelight.models import SH_ORDER
from ianrelight.network import relight
from ianrelight.operations import load_checkpoint


def level_output_path(out: Path, rank: int) -> Path:
    r"""The path of the output `rank` levels coarser than the finest, e.g. "relit_l1.png"."""
    return out.with_name(f'{out.stem}_l{rank}{out.suffix}')


@click.command(name='infer')
@click.argument('image_path', metavar='INPUT', type=EXISTING_FILE)
@click.option(
    '--ckpt', 'checkpoint_path', required=True, type=EXISTING_FILE, help='The checkpoint.'
)
@click.option('--depth', 'depth_path', type=EXISTING_FILE, help='The depth map PNG of the input.')
@click.option(
    '--light',
    nargs=9,
    type=float,
    default=None,
    help=f'The 9 SH coefficients of the target light in the order {", ".join(SH_ORDER)}.',
)
@click.option(
    '--out',
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
    help='The path of the relit PNG.',
)
@click.option(
    '--all-levels',
    is_flag=True,
    default=False,
    help='Also write the outputs of the coarser levels with the suffixes "_l1", "_l2", ...',
)
@click.pass_context
def infer(
    ctx: click.Context,
    image_path: Path,
    checkpoint_path: Path,
    depth_path: Path | None,
    light: tuple[float, ...] | None,
    out: Path,
    all_levels: bool,
) -> None:
    r"""Relight the image INPUT with a trained network"""

    cm = load_resources(ctx)
    echo_config(cm)

    try:
        model = load_checkpoint(checkpoint_path).model
        config = model.config

        if config.use_dgge and depth_path is None:
            message = 'The network requires a depth map! Use --depth.'
            exit_program(error=True, ctx=ctx, message=message)
        if config.use_light_projector and not light:
            message = 'The network requires a target light! Use --light.'
            exit_program(error=True, ctx=ctx, message=message)
        if light and not config.use_light_projector:
            echo_with_log(
                'The network has no light projector, ignoring --light.',
                log_level=logging.WARNING,
                color=Color.WARNING,
            )
        if depth_path is not None and not config.use_dgge:
            echo_with_log(
                'The network has no geometry encoder, ignoring --depth.',
                log_level=logging.WARNING,
                color=Color.WARNING,
            )

        image = load_image(image_path)
        config.check_input_size(*image.shape[1:])
        depth = load_depth(depth_path) if config.use_dgge and depth_path is not None else None
        target = np.array(light, dtype=np.float64) if config.use_light_projector else None

        outputs = relight(model, image, depth=depth, light=target)

        out.parent.mkdir(parents=True, exist_ok=True)
        save_image(outputs[-1], out)
        if all_levels:
            for rank, output in enumerate(reversed(outputs[:-1]), start=1):
                path = level_output_path(out, rank)
                save_image(output, path)
                echo_with_log(f'Wrote the level {rank} output to "{path}".')
    except IANRelightError as e:
        exit_program(error=True, ctx=ctx, message=f'Error relighting "{image_path}"!\n{e!s}')

    exit_program(error=False, ctx=ctx, message=f'Successfully relit "{image_path}" to "{out}"!')

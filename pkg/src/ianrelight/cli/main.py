# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The entry point of the IANRelight CLI."""

# Standard library
from pathlib import Path

# Third party
import click

# Local
from ianrelight.cli.core import Obj, exit_program
from ianrelight.cli.evaluate import evaluate_
from ianrelight.cli.gen_data import gen_data
from ianrelight.cli.gradcheck import gradcheck
from ianrelight.cli.info import info
from ianrelight.cli.infer import infer
from ianrelight.cli.train import train
from ianrelight.config import load_config
from ianrelight.exceptions import ConfigError
from ianrelight.log import setup_logging
from ianrelight.metadata import __releasedate__, __version__


@click.group(
    name='ianrelight',
    context_settings={'help_option_names': ['-h', '--help'], 'max_content_width': 1000},
)
@click.option(
    '--config',
    type=click.Path(
        exists=True,
        file_okay=True,
        dir_okay=False,
        writable=False,
        allow_dash=True,
        path_type=Path,
    ),
    show_default=True,
    help=(
        'The path to the configuration file (TOML or JSON), or "-" to read it from stdin. '
        'If not specified the configuration will be loaded from these sources in descending '
        'order of relevance: '
        '1. A config file specified in environment variable IANRELIGHT_CONFIG_FILE. '
        '2. From the default config file location "~/.config/IANRelight/IANRelight.toml". '
        '3. The defaults. '
        'Options of the sub-commands take precedence over the configuration.'
    ),
)
@click.version_option(
    __version__,
    message=f'%(prog)s, version: %(version)s, release date: {__releasedate__}',
)
@click.pass_context
def main(ctx: click.Context, config: Path | None) -> None:
    r"""Relight images with the illumination-aware network"""

    ctx.ensure_object(dict)

    path = config if config is None or config.name == '-' else config.expanduser().resolve()
    try:
        cm = load_config(path=path)
    except ConfigError as e:
        error_msg = f'Error loading configuration!\n{e!s}'
        exit_program(error=True, ctx=ctx, message=error_msg)
    else:
        ctx.obj[Obj.CONFIG] = cm

    setup_logging(config=cm.logging)


for cmd in (gen_data, train, infer, evaluate_, gradcheck, info):
    main.add_command(cmd)

if __name__ == '__main__':
    main()

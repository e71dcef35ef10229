# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Fixtures for testing IANRelight."""

# Standard library
import io
import logging
from collections.abc import Iterator
from copy import deepcopy
from pathlib import Path
from typing import Any

# Third party
import numpy as np
import pytest

# Local
import ianrelight.config.config
from ianrelight.config import (
    LOGGING_DEFAULT_DATETIME_FORMAT,
    LOGGING_DEFAULT_FORMAT,
    LOGGING_DEFAULT_FORMAT_DEBUG,
    BlockVariant,
    DatasetSpec,
    IANConfig,
    LightPolicy,
    LogLevel,
    LossPreset,
    Stream,
)
from ianrelight.data import RelightDataset, gen_dataset, load_dataset
from ianrelight.tensor import precision
from tests.config import STATIC_FILES_CONFIG_BASE_DIR

# =================================================================================================
# Config
# =================================================================================================

LOGGER = logging.getLogger()


@pytest.fixture(autouse=True)
def reset_log_handlers() -> Iterator[None]:
    r"""Ensure that log handlers are reset after every test.

    This fixture makes sure that tests that use the `capsys` fixture do not cause
    failures for other tests downstream. When `capsys` is torn down at the end
    of a test it closes the stream it captures and thus subsequent tests that
    tries to write to stdout or stderr will try to write to a closed stream,
    which will raise: "ValueError: I/O operation on closed file." and fail the test.
    """

    before_handlers = list(LOGGER.handlers)
    before_level = LOGGER.level
    yield
    LOGGER.handlers = before_handlers
    LOGGER.setLevel(before_level)


@pytest.fixture
def remove_config_file_env_var(monkeypatch: pytest.MonkeyPatch) -> None:
    r"""Remove the config file environment variable IANRELIGHT_CONFIG_FILE."""

    monkeypatch.delenv(ianrelight.config.config.CONFIG_FILE_ENV_VAR, raising=False)


@pytest.fixture
def config_data(tmp_path: Path) -> tuple[str, dict[str, Any]]:
    r"""An IANRelight configuration of a small network and a random light dataset.

    Returns
    -------
    config_data_str : str
        The configuration as a string of toml.

    config_exp : dict[str, Any]
        The expected values of the sections that the configuration specifies.
    """

    source_config_file_path = STATIC_FILES_CONFIG_BASE_DIR / 'IANRelight.toml'

    assert source_config_file_path.exists(), f'File "{source_config_file_path}" does not exist!'

    checkpoint_path = tmp_path / 'small.ianckpt'
    config_data_str = source_config_file_path.read_text().replace(
        ':checkpoint_path', str(checkpoint_path)
    )

    config_exp = {
        'model': {
            'levels': 3,
            'blocks_per_level': 2,
            'base_channels': 8,
            'block_variant': BlockVariant.FULL,
            'use_dgge': True,
            'use_depth': True,
            'use_normal': False,
            'use_pe': True,
            'use_light_projector': False,
        },
        'loss': {
            'preset': LossPreset.GRADIENT,
            'alpha': 1.0,
            'beta': 0.0,
            'gamma': 0.5,
            'level_weights': None,
            'level_ratio': 2.0,
        },
        'data': {'count': 12, 'size': 32, 'seed': 11, 'policy': LightPolicy.RANDOM},
        'run': {
            'iterations': 40,
            'batch_size': 3,
            'lr': 2e-4,
            'seed': 5,
            'log_interval': 5,
            'eval_interval': 20,
            'holdout': 2,
            'checkpoint_path': checkpoint_path,
            'report_path': None,
        },
        'logging': {
            'disabled': False,
            'min_log_level': LogLevel.DEBUG,
            'format': LOGGING_DEFAULT_FORMAT_DEBUG,
            'datetime_format': LOGGING_DEFAULT_DATETIME_FORMAT,
            'stream': {
                'stdout': {
                    'stream': Stream.STDOUT,
                    'disabled': False,
                    'min_log_level': LogLevel.WARNING,
                    'format': LOGGING_DEFAULT_FORMAT,
                    'datetime_format': LOGGING_DEFAULT_DATETIME_FORMAT,
                }
            },
            'file': None,
        },
    }

    return config_data_str, config_exp


@pytest.fixture
def config_file(
    config_data: tuple[str, dict[str, Any]], tmp_path: Path
) -> tuple[Path, str, dict[str, Any]]:
    r"""An IANRelight config file.

    Returns
    -------
    config_file_path : pathlib.Path
        The path to the config file.

    config_data_str : str
        The configuration written to `config_file_path` as a string of toml.

    config_exp : dict[str, Any]
        The expected configuration after loading `config_file_path`.
    """

    config_data_str, config_exp_original = config_data

    config_file_path = tmp_path / 'IANRelight.toml'
    config_file_path.write_text(config_data_str)

    config_exp = deepcopy(config_exp_original)
    config_exp['config_file_path'] = config_file_path

    return config_file_path, config_data_str, config_exp


@pytest.fixture
def config_in_stdin(
    config_data: tuple[str, dict[str, Any]], monkeypatch: pytest.MonkeyPatch
) -> tuple[str, dict[str, Any]]:
    r"""An IANRelight configuration loaded into stdin.

    Returns
    -------
    config_data_str : str
        The configuration as a string of toml.

    config_exp : dict[str, Any]
        The expected configuration after loading and parsing `config_data_str`.
    """

    config_data_str, config_exp_original = config_data
    config_exp = deepcopy(config_exp_original)
    config_exp['config_file_path'] = Path('-')

    monkeypatch.setattr(ianrelight.config.config.sys, 'stdin', io.StringIO(config_data_str))

    return config_data_str, config_exp


@pytest.fixture
def empty_stdin(monkeypatch: pytest.MonkeyPatch) -> None:
    r"""A mocked stdin that is empty."""

    monkeypatch.setattr(ianrelight.config.config.sys, 'stdin', io.StringIO(''))


@pytest.fixture
def config_file_from_config_env_var(
    config_data: tuple[str, dict[str, Any]],
    monkeypatch: pytest.MonkeyPatch,
    tmp_path: Path,
) -> tuple[Path, str, dict[str, Any]]:
    r"""The config file environment variable IANRELIGHT_CONFIG_FILE is defined.

    Returns
    -------
    config_file_path : pathlib.Path
        The path to the config file defined in the environment variable.

    config_data_str : str
        The configuration written to `config_file_path` as a string of toml.

    config_exp : dict[str, Any]
        The expected configuration after loading `config_file_path`.
    """

    config_data_str, config_exp_original = config_data

    config_file_path = tmp_path / 'IANRelight_from_env_var.toml'
    config_file_path.write_text(config_data_str)

    config_exp = deepcopy(config_exp_original)
    config_exp['config_file_path'] = config_file_path

    monkeypatch.setenv(ianrelight.config.config.CONFIG_FILE_ENV_VAR, str(config_file_path))

    return config_file_path, config_data_str, config_exp


@pytest.fixture
def config_file_from_default_location(
    config_data: tuple[str, dict[str, Any]],
    monkeypatch: pytest.MonkeyPatch,
    tmp_path: Path,
) -> tuple[Path, str, dict[str, Any]]:
    r"""A config file at the default config file location of IANRelight.

    The true default config file location is "~/.config/IANRelight/IANRelight.toml"
    and it is mocked with a temporary directory.
    """

    config_data_str, config_exp_original = config_data

    config_file_path = tmp_path / 'IANRelight_from_default_location.toml'
    config_file_path.write_text(config_data_str)

    monkeypatch.setattr(ianrelight.config.config, 'CONFIG_FILE_PATH', config_file_path)

    config_exp = deepcopy(config_exp_original)
    config_exp['config_file_path'] = config_file_path

    return config_file_path, config_data_str, config_exp


@pytest.fixture
def default_config_file_location_does_not_exist(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> Path:
    r"""A mocked default config file location of IANRelight that does not exist."""

    config_file_path = tmp_path / 'IANRelight_default_does_not_exist.toml'

    monkeypatch.setattr(ianrelight.config.config, 'CONFIG_FILE_PATH', config_file_path)

    return config_file_path


@pytest.fixture
def config_file_with_syntax_error(tmp_path: Path) -> Path:
    r"""An IANRelight config file with syntax errors."""

    source_filename = 'IANRelight_syntax_error.toml'
    source_config_file_path = STATIC_FILES_CONFIG_BASE_DIR / source_filename

    assert source_config_file_path.exists(), f'File "{source_config_file_path}" does not exist!'

    config_file_path = tmp_path / source_filename
    config_file_path.write_text(source_config_file_path.read_text())

    return config_file_path


# =================================================================================================
# Autograd
# =================================================================================================


@pytest.fixture
def float64() -> Iterator[None]:
    r"""Create the tensors of a test in 64-bit precision."""

    with precision(np.float64):
        yield


@pytest.fixture
def rng() -> np.random.Generator:
    r"""A seeded random generator."""

    return np.random.default_rng(1234)


# =================================================================================================
# Network
# =================================================================================================


@pytest.fixture
def tiny_config() -> IANConfig:
    r"""A tiny three level network with geometry guidance for inputs of 16x16 pixels."""

    return IANConfig(levels=3, blocks_per_level=1, base_channels=4)


@pytest.fixture
def tiny_light_config() -> IANConfig:
    r"""A tiny light-conditioned network without geometry guidance."""

    return IANConfig(
        levels=2,
        blocks_per_level=1,
        base_channels=4,
        use_dgge=False,
        use_light_projector=True,
        light_embed_dim=6,
        projector_hidden=8,
    )


# =================================================================================================
# Data
# =================================================================================================


@pytest.fixture(scope='session')
def fixed_dataset_dir(tmp_path_factory: pytest.TempPathFactory) -> Path:
    r"""A generated dataset of 6 pairs of 16x16 pixels with the fixed light policy.

    The dataset is shared by all tests and must not be modified.
    """

    path = tmp_path_factory.mktemp('fixed_dataset')
    gen_dataset(DatasetSpec(count=6, size=16, seed=3), out_dir=path)

    return path


@pytest.fixture(scope='session')
def random_dataset_dir(tmp_path_factory: pytest.TempPathFactory) -> Path:
    r"""A generated dataset of 6 pairs of 16x16 pixels with the random light policy.

    The dataset is shared by all tests and must not be modified.
    """

    path = tmp_path_factory.mktemp('random_dataset')
    gen_dataset(DatasetSpec(count=6, size=16, seed=4, policy=LightPolicy.RANDOM), out_dir=path)

    return path


@pytest.fixture
def fixed_dataset(fixed_dataset_dir: Path) -> RelightDataset:
    r"""The loaded dataset of the fixed light policy."""

    return load_dataset(fixed_dataset_dir)


@pytest.fixture
def random_dataset(random_dataset_dir: Path) -> RelightDataset:
    r"""The loaded dataset of the random light policy."""

    return load_dataset(random_dataset_dir)

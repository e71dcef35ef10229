# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Saving and loading networks with their training state.

A checkpoint file is laid out as::

    b'IANCKPT'          7 bytes magic
    version             u16, little-endian
    header length       u32, little-endian
    header              UTF-8 JSON, see :class:`ianrelight.models.CheckpointHeader`
    data                little-endian float32 arrays at the offsets listed in the header

The arrays are the parameters ("param/<name>") followed by the first and second moments of
the Adam optimizer ("adam.m/<name>" and "adam.v/<name>") if present.
"""

# Standard library
import logging
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Any

# Third party
import numpy as np
from pydantic import ValidationError

# Local
from ianrelight import exceptions
from ianrelight.config import IANConfig
from ianrelight.core import has_required_keys
from ianrelight.models import AdamHeader, ArrayEntry, CheckpointHeader
from ianrelight.network import IANetwork, LayerKind, build_plan
from ianrelight.nn import AdamState, ConvWeights, LinearWeights
from ianrelight.tensor import Tensor

logger = logging.getLogger(__name__)

MAGIC = b'IANCKPT'
FORMAT_VERSION = 1
ARRAY_DTYPE = '<f4'

_PREAMBLE = struct.Struct('<7sHI')

PARAM_PREFIX = 'param/'
ADAM_M_PREFIX = 'adam.m/'
ADAM_V_PREFIX = 'adam.v/'


@dataclass(slots=True)
class Checkpoint:
    r"""A network and the state of the training run that produced it.

    Parameters
    ----------
    model : ianrelight.network.IANetwork
        The network.

    iteration : int, default 0
        The number of completed training iterations.

    adam : ianrelight.nn.AdamState or None, default None
        The state of the optimizer.

    rng_state : dict[str, Any] or None, default None
        The state of the random generator of the batch order.

    run : dict[str, Any] or None, default None
        The configuration of the run.
    """

    model: IANetwork
    iteration: int = 0
    adam: AdamState | None = None
    rng_state: dict[str, Any] | None = None
    run: dict[str, Any] | None = None


def _collect_arrays(checkpoint: Checkpoint) -> dict[str, np.ndarray]:
    arrays = {
        f'{PARAM_PREFIX}{name}': p.data for name, p in checkpoint.model.parameters().items()
    }
    if checkpoint.adam is not None:
        for name in checkpoint.model.parameters():
            if name in checkpoint.adam.m:
                arrays[f'{ADAM_M_PREFIX}{name}'] = checkpoint.adam.m[name]
                arrays[f'{ADAM_V_PREFIX}{name}'] = checkpoint.adam.v[name]

    return arrays


def save_checkpoint(checkpoint: Checkpoint, path: Path) -> Path:
    r"""Write a checkpoint to `path`.

    Parameters
    ----------
    checkpoint : ianrelight.operations.Checkpoint
        The checkpoint to save.

    path : pathlib.Path
        The file to write. Missing parent directories are created.

    Returns
    -------
    pathlib.Path
        The written file.

    Raises
    ------
    ianrelight.CheckpointError
        If the file cannot be written.
    """

    entries, blobs, offset = [], [], 0
    for name, array in _collect_arrays(checkpoint).items():
        blob = np.ascontiguousarray(array, dtype=ARRAY_DTYPE).tobytes()
        entries.append(ArrayEntry(name=name, dtype=ARRAY_DTYPE, shape=array.shape, offset=offset))
        blobs.append(blob)
        offset += len(blob)

    adam = checkpoint.adam
    header = CheckpointHeader(
        model=checkpoint.model.config,
        iteration=checkpoint.iteration,
        adam=None
        if adam is None
        else AdamHeader(
            lr=adam.lr, beta1=adam.beta1, beta2=adam.beta2, eps=adam.eps, step=adam.step
        ),
        rng_state=checkpoint.rng_state,
        run=checkpoint.run,
        arrays=entries,
    )
    header_bytes = header.model_dump_json().encode('utf-8')

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open('wb') as f:
            f.write(_PREAMBLE.pack(MAGIC, FORMAT_VERSION, len(header_bytes)))
            f.write(header_bytes)
            for blob in blobs:
                f.write(blob)
    except OSError as e:
        raise exceptions.CheckpointError(f'Cannot write checkpoint "{path}"!\n{e!s}') from None

    logger.info(f'Saved checkpoint of iteration {checkpoint.iteration} to "{path}".')

    return path


def read_header(content: bytes, path: Path | str = '') -> tuple[CheckpointHeader, int]:
    r"""Parse the preamble and the header of the bytes of a checkpoint file.

    Returns
    -------
    header : ianrelight.models.CheckpointHeader
        The header.

    data_start : int
        The offset of the data section in `content`.

    Raises
    ------
    ianrelight.CheckpointError
        If the magic or the version does not match or the header is truncated or invalid.
    """

    if len(content) < _PREAMBLE.size:
        raise exceptions.CheckpointError(f'Checkpoint "{path}" is truncated!')

    magic, version, header_len = _PREAMBLE.unpack_from(content)
    if magic != MAGIC:
        raise exceptions.CheckpointError(f'"{path}" is not a checkpoint, magic {magic!r}!')
    if version != FORMAT_VERSION:
        raise exceptions.CheckpointError(
            f'Checkpoint "{path}" has format version {version}, '
            f'supported version is {FORMAT_VERSION}!'
        )

    data_start = _PREAMBLE.size + header_len
    if len(content) < data_start:
        raise exceptions.CheckpointError(f'The header of checkpoint "{path}" is truncated!')

    try:
        header = CheckpointHeader.model_validate_json(content[_PREAMBLE.size : data_start])
    except (ValidationError, exceptions.IANRelightError) as e:
        raise exceptions.CheckpointError(
            f'Invalid header of checkpoint "{path}"!\n{e!s}'
        ) from None

    return header, data_start


def _layers_from_arrays(config: IANConfig, params: dict[str, np.ndarray]) -> dict[str, Any]:
    layers: dict[str, ConvWeights | LinearWeights] = {}
    for spec in build_plan(config):
        weight, bias = params[f'{spec.name}.weight'], params[f'{spec.name}.bias']
        if weight.shape != spec.weight_shape:
            raise exceptions.CheckpointError(
                f'Parameter "{spec.name}.weight" has shape {weight.shape}, '
                f'expected {spec.weight_shape}!'
            )

        w = Tensor(weight, requires_grad=True, name=f'{spec.name}.weight')
        b = Tensor(bias, requires_grad=True, name=f'{spec.name}.bias')
        try:
            if spec.kind == LayerKind.CONV:
                layers[spec.name] = ConvWeights(
                    kernel=w, bias=b, stride=spec.stride, dilation=spec.dilation
                )
            else:
                layers[spec.name] = LinearWeights(weight=w, bias=b)
        except exceptions.ShapeError as e:
            raise exceptions.CheckpointError(
                f'Invalid parameter of layer "{spec.name}": {e!s}'
            ) from None

    return layers


def load_checkpoint(path: Path, config: IANConfig | None = None) -> Checkpoint:
    r"""Load a checkpoint.

    Parameters
    ----------
    path : pathlib.Path
        The checkpoint file.

    config : ianrelight.config.IANConfig or None, default None
        The architecture to load the parameters into. If None the architecture
        stored in the checkpoint is used.

    Returns
    -------
    ianrelight.operations.Checkpoint
        The checkpoint with the network built from the stored parameters.

    Raises
    ------
    ianrelight.CheckpointError
        If the file cannot be read, is corrupted or truncated, or if its parameters
        do not match the layers of `config`.
    """

    try:
        content = path.read_bytes()
    except OSError as e:
        raise exceptions.CheckpointError(f'Cannot read checkpoint "{path}"!\n{e!s}') from None

    header, data_start = read_header(content, path=path)
    data = memoryview(content)[data_start:]
    if len(data) != header.data_size:
        raise exceptions.CheckpointError(
            f'Checkpoint "{path}" has {len(data)} bytes of data, expected {header.data_size}!'
        )

    arrays: dict[str, np.ndarray] = {}
    for entry in header.arrays:
        count = int(np.prod(entry.shape, dtype=np.int64))
        try:
            a = np.frombuffer(data, dtype=entry.dtype, count=count, offset=entry.offset)
            arrays[entry.name] = a.reshape(entry.shape).astype(np.float32)
        except (ValueError, TypeError) as e:
            raise exceptions.CheckpointError(
                f'Array "{entry.name}" of checkpoint "{path}" is corrupted!\n{e!s}'
            ) from None

    model_config = header.model if config is None else config
    params = {
        name.removeprefix(PARAM_PREFIX): a
        for name, a in arrays.items()
        if name.startswith(PARAM_PREFIX)
    }
    expected = {f'{spec.name}.{p}' for spec in build_plan(model_config) for p in ('weight', 'bias')}

    result = has_required_keys(keys=params, required_keys=expected)
    if not result.ok:
        raise exceptions.CheckpointError(
            f'The parameters of checkpoint "{path}" do not match the configuration!\n'
            f'{result.long_msg}'
        )

    model = IANetwork(model_config, _layers_from_arrays(model_config, params))

    adam = None
    if header.adam is not None:
        adam = AdamState(
            lr=header.adam.lr,
            beta1=header.adam.beta1,
            beta2=header.adam.beta2,
            eps=header.adam.eps,
            step=header.adam.step,
            m={
                name.removeprefix(ADAM_M_PREFIX): a
                for name, a in arrays.items()
                if name.startswith(ADAM_M_PREFIX)
            },
            v={
                name.removeprefix(ADAM_V_PREFIX): a
                for name, a in arrays.items()
                if name.startswith(ADAM_V_PREFIX)
            },
        )

    logger.info(f'Loaded checkpoint of iteration {header.iteration} from "{path}".')

    return Checkpoint(
        model=model,
        iteration=header.iteration,
        adam=adam,
        rng_state=header.rng_state,
        run=header.run,
    )

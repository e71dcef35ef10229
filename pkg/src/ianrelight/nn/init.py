# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Initialization of learnable weights."""

# Standard library
import math
from collections.abc import Sequence

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.tensor import Tensor, get_default_dtype


def fan_in_and_out(shape: Sequence[int]) -> tuple[int, int]:
    r"""Derive the fan-in and fan-out of a weight from its shape.

    Linear weights have shape [out_dim, in_dim] and convolution kernels [out_ch, in_ch, k, k].
    A vector shape yields its length for both.

    Raises
    ------
    ianrelight.ShapeError
        If `shape` is empty.
    """

    if len(shape) == 0:
        raise exceptions.ShapeError('Cannot derive fan-in and fan-out from an empty shape!')
    if len(shape) == 1:
        return shape[0], shape[0]

    receptive_field = math.prod(shape[2:])
    return shape[1] * receptive_field, shape[0] * receptive_field


def xavier_init(
    shape: Sequence[int], rng_seed: int | np.random.Generator, name: str = ''
) -> Tensor:
    r"""Sample a weight from the Xavier (Glorot) uniform distribution.

    The values are uniform in ±sqrt(6 / (fan_in + fan_out)).

    Parameters
    ----------
    shape : Sequence[int]
        The shape of the weight.

    rng_seed : int or numpy.random.Generator
        The seed of a new random generator or a generator to draw from.

    name : str, default ''
        The name of the parameter.

    Returns
    -------
    ianrelight.tensor.Tensor
        The initialized weight, requiring a gradient.
    """

    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    fan_in, fan_out = fan_in_and_out(shape)
    bound = math.sqrt(6.0 / (fan_in + fan_out))
    data = rng.uniform(-bound, bound, size=tuple(shape)).astype(get_default_dtype())

    return Tensor(data, requires_grad=True, name=name)


def zeros(shape: Sequence[int], name: str = '') -> Tensor:
    r"""A zero-initialized parameter, used for biases."""

    return Tensor(np.zeros(tuple(shape), dtype=get_default_dtype()), requires_grad=True, name=name)

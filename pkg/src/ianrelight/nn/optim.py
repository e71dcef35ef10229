# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The Adam optimizer."""

# Standard library
import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.tensor import Tensor

logger = logging.getLogger(__name__)


@dataclass
class AdamState:
    r"""The state of the Adam optimizer.

    Parameters
    ----------
    lr : float, default 1e-4
        The learning rate.

    beta1 : float, default 0.9
        The decay rate of the first moment.

    beta2 : float, default 0.999
        The decay rate of the second moment.

    eps : float, default 1e-8
        Added to the root of the second moment to avoid division by zero.

    step : int, default 0
        The number of performed update steps.

    m : dict[str, numpy.ndarray]
        The first moment buffer of each parameter.

    v : dict[str, numpy.ndarray]
        The second moment buffer of each parameter.
    """

    lr: float = 1e-4
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    step: int = 0
    m: dict[str, np.ndarray] = field(default_factory=dict)
    v: dict[str, np.ndarray] = field(default_factory=dict)


def adam_step(
    params: Mapping[str, Tensor],
    grads: Mapping[str, np.ndarray | None] | None,
    state: AdamState,
) -> None:
    r"""Update the parameters in place with one bias-corrected Adam step.

    Parameters
    ----------
    params : Mapping[str, ianrelight.tensor.Tensor]
        The parameters to update by name.

    grads : Mapping[str, numpy.ndarray or None] or None
        The gradient of each parameter. If None the accumulated gradients
        :attr:`Tensor.grad` of `params` are used. Parameters without a gradient are skipped.

    state : ianrelight.nn.AdamState
        The optimizer state, updated in place.

    Raises
    ------
    ianrelight.ShapeError
        If a gradient or a moment buffer does not match the shape of its parameter.
    """

    _grads = {name: p.grad for name, p in params.items()} if grads is None else grads
    state.step += 1
    bias1 = 1.0 - state.beta1**state.step
    bias2 = 1.0 - state.beta2**state.step

    for name, p in params.items():
        grad = _grads.get(name)
        if grad is None:
            continue
        if grad.shape != p.shape:
            raise exceptions.ShapeError(
                f'Gradient of "{name}" has shape {grad.shape}, expected {p.shape}!'
            )

        m = state.m.setdefault(name, np.zeros_like(p.data))
        v = state.v.setdefault(name, np.zeros_like(p.data))
        if m.shape != p.shape or v.shape != p.shape:
            raise exceptions.ShapeError(f'The moment buffers of "{name}" do not match {p.shape}!')

        m *= state.beta1
        m += (1.0 - state.beta1) * grad
        v *= state.beta2
        v += (1.0 - state.beta2) * grad * grad

        update = state.lr * (m / bias1) / (np.sqrt(v / bias2) + state.eps)
        p.data -= update.astype(p.dtype, copy=False)


class Adam:
    r"""The Adam optimizer over a fixed set of named parameters.

    Parameters
    ----------
    params : Mapping[str, ianrelight.tensor.Tensor]
        The parameters to optimize.

    lr : float, default 1e-4
        The learning rate.

    betas : tuple[float, float], default (0.9, 0.999)
        The decay rates of the first and second moments.

    eps : float, default 1e-8
        The stabilizing constant of the denominator.

    state : ianrelight.nn.AdamState or None, default None
        A state to resume from, e.g. loaded from a checkpoint.
    """

    def __init__(
        self,
        params: Mapping[str, Tensor],
        lr: float = 1e-4,
        betas: tuple[float, float] = (0.9, 0.999),
        eps: float = 1e-8,
        state: AdamState | None = None,
    ) -> None:
        self.params = dict(params)
        self.state = (
            AdamState(lr=lr, beta1=betas[0], beta2=betas[1], eps=eps) if state is None else state
        )

    def zero_grad(self) -> None:
        r"""Reset the gradients of all parameters."""

        for p in self.params.values():
            p.zero_grad()

    def step(self) -> None:
        r"""Update the parameters from their accumulated gradients."""

        adam_step(self.params, grads=None, state=self.state)

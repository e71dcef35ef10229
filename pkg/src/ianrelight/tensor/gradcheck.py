# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Finite-difference oracles for verifying the gradients of the autograd engine."""

# Standard library
from collections.abc import Callable, Mapping, Sequence
from typing import NamedTuple

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.tensor.core import Tensor, backward, no_grad, precision

type ScalarFunc = Callable[..., Tensor]

DEFAULT_STEP = 1e-3


class GradCheckResult(NamedTuple):
    r"""The outcome of comparing analytic gradients with finite differences.

    Parameters
    ----------
    name : str
        The name of the checked operation.

    max_rel_error : float
        The maximum absolute deviation between the analytic and the numeric gradient
        divided by the largest gradient magnitude of the check.

    n_elements : int
        The number of checked gradient elements.

    tolerance : float
        The maximum accepted relative error.
    """

    name: str
    max_rel_error: float
    n_elements: int
    tolerance: float

    @property
    def passed(self) -> bool:
        r"""True if the relative error is below the tolerance."""
        return self.max_rel_error < self.tolerance


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    r"""The maximum elementwise deviation relative to the largest gradient magnitude."""

    scale = max(
        float(np.max(np.abs(analytic), initial=0.0)),
        float(np.max(np.abs(numeric), initial=0.0)),
    )
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(analytic - numeric))) / scale


def finite_diff_grad(f: ScalarFunc, t: Tensor, h: float = DEFAULT_STEP) -> Tensor:
    r"""Estimate the gradient of a scalar function with central differences.

    Each element is estimated as (f(t + h·e) − f(t − h·e)) / 2h in 64-bit precision.

    Parameters
    ----------
    f : Callable[[ianrelight.tensor.Tensor], ianrelight.tensor.Tensor]
        A deterministic function returning a single element tensor.

    t : ianrelight.tensor.Tensor
        The point at which to estimate the gradient.

    h : float, default 1e-3
        The step size.

    Returns
    -------
    ianrelight.tensor.Tensor
        The estimated gradient in 64-bit precision.

    Raises
    ------
    ianrelight.TensorError
        If `h` is not positive.
    """

    if h <= 0:
        raise exceptions.TensorError(f'The step size must be positive, got {h}!')

    x = t.data.astype(np.float64, copy=True)
    grad = np.zeros_like(x)

    with precision(np.float64), no_grad():
        for idx in np.ndindex(x.shape):
            orig = x[idx]
            x[idx] = orig + h
            f_plus = f(Tensor(x.copy())).item()
            x[idx] = orig - h
            f_minus = f(Tensor(x.copy())).item()
            x[idx] = orig
            grad[idx] = (f_plus - f_minus) / (2 * h)

    return Tensor(grad, dtype=np.float64)


def check_gradients(
    f: ScalarFunc,
    inputs: Sequence[np.ndarray],
    name: str = '',
    h: float = DEFAULT_STEP,
    tolerance: float = 1e-4,
) -> GradCheckResult:
    r"""Compare the analytic gradients of `f` with respect to every input with finite differences.

    Parameters
    ----------
    f : Callable[..., ianrelight.tensor.Tensor]
        A function of ``len(inputs)`` tensors returning a single element tensor.

    inputs : Sequence[numpy.ndarray]
        The values of the inputs.

    name : str, default ''
        The name of the check.

    h : float, default 1e-3
        The step size of the central differences.

    tolerance : float, default 1e-4
        The maximum accepted relative error.

    Returns
    -------
    ianrelight.tensor.gradcheck.GradCheckResult
        The largest relative error over all inputs.
    """

    with precision(np.float64):
        tensors = [Tensor(np.asarray(x, dtype=np.float64), requires_grad=True) for x in inputs]
        backward(f(*tensors))

        errors = []
        for i, t in enumerate(tensors):

            def partial(x: Tensor, i: int = i) -> Tensor:
                args = [x if j == i else Tensor(tensors[j].data) for j in range(len(tensors))]
                return f(*args)

            numeric = finite_diff_grad(partial, t, h=h).data
            analytic = np.zeros_like(t.data) if t.grad is None else t.grad
            errors.append(relative_error(analytic, numeric))

    return GradCheckResult(
        name=name,
        max_rel_error=max(errors, default=0.0),
        n_elements=sum(x.size for x in inputs),
        tolerance=tolerance,
    )


def spot_check(
    f: Callable[[], Tensor],
    params: Mapping[str, Tensor],
    count: int = 20,
    seed: int = 0,
    h: float = 1e-5,
    tolerance: float = 1e-3,
    name: str = 'spot check',
) -> GradCheckResult:
    r"""Check the gradient of randomly selected parameter elements with central differences.

    `f` closes over `params` and is re-evaluated after each parameter perturbation.
    The parameters should be 64-bit for a meaningful check.

    Parameters
    ----------
    f : Callable[[], ianrelight.tensor.Tensor]
        A function computing a scalar loss from the current values of `params`.

    params : Mapping[str, ianrelight.tensor.Tensor]
        The parameters to sample from.

    count : int, default 20
        The number of parameter elements to check.

    seed : int, default 0
        The seed of the element selection.

    h : float, default 1e-5
        The step size.

    tolerance : float, default 1e-3
        The maximum accepted relative error.

    name : str, default 'spot check'
        The name of the check.

    Returns
    -------
    ianrelight.tensor.gradcheck.GradCheckResult
        The largest relative error of the checked elements.
    """

    for p in params.values():
        p.zero_grad()
    backward(f())

    rng = np.random.default_rng(seed)
    names = sorted(params)
    analytic, numeric = [], []

    with no_grad():
        for _ in range(count):
            p = params[names[rng.integers(len(names))]]
            idx = tuple(int(rng.integers(n)) for n in p.shape)
            orig = p.data[idx]
            p.data[idx] = orig + h
            f_plus = f().item()
            p.data[idx] = orig - h
            f_minus = f().item()
            p.data[idx] = orig
            numeric.append((f_plus - f_minus) / (2 * h))
            analytic.append(0.0 if p.grad is None else float(p.grad[idx]))

    return GradCheckResult(
        name=name,
        max_rel_error=relative_error(np.array(analytic), np.array(numeric)),
        n_elements=count,
        tolerance=tolerance,
    )

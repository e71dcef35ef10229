# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""A dense tensor with reverse-mode automatic differentiation.

A :class:`Tensor` wraps a :class:`numpy.ndarray`. Every differentiable operation is a subclass
of :class:`Function` whose :meth:`Function.apply` records the operation on the output tensor.
:func:`backward` sorts the recorded operations topologically into a :class:`Tape` and propagates
the gradient of a scalar loss back to every tensor that requires a gradient.
"""

# Standard library
from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from typing import Any, ClassVar, Literal

# Third party
import numpy as np

# Local
from ianrelight import exceptions

type Axes = int | Sequence[int] | None
type Operand = Tensor | float | int
type BinaryKind = Literal['add', 'sub', 'mul', 'div']

logger = logging.getLogger(__name__)


class _State:
    r"""The process wide settings of the autograd engine."""

    dtype: ClassVar[np.dtype] = np.dtype(np.float32)
    grad_enabled: ClassVar[bool] = True


def get_default_dtype() -> np.dtype:
    r"""Get the floating point type of new tensors."""

    return _State.dtype


@contextmanager
def precision(dtype: type[np.floating] | np.dtype) -> Iterator[None]:
    r"""Temporarily change the floating point type of new tensors.

    Parameters
    ----------
    dtype : type[numpy.floating] or numpy.dtype
        The floating point type, numpy.float32 (default) or numpy.float64.
        Gradient checks run with numpy.float64.
    """

    new = np.dtype(dtype)
    if new not in (np.dtype(np.float32), np.dtype(np.float64)):
        raise exceptions.TensorError(f'Unsupported precision "{new}"! Use float32 or float64.')

    previous = _State.dtype
    _State.dtype = new
    try:
        yield
    finally:
        _State.dtype = previous


@contextmanager
def no_grad() -> Iterator[None]:
    r"""Disable the recording of operations, e.g. during inference and evaluation."""

    previous = _State.grad_enabled
    _State.grad_enabled = False
    try:
        yield
    finally:
        _State.grad_enabled = previous


def is_grad_enabled() -> bool:
    r"""Check if operations are recorded for backpropagation."""

    return _State.grad_enabled


def unbroadcast(grad: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    r"""Sum `grad` over the axes that were broadcast to produce it from `shape`."""

    if grad.shape == shape:
        return grad

    extra = grad.ndim - len(shape)
    if extra > 0:
        grad = grad.sum(axis=tuple(range(extra)))

    axes = tuple(i for i, n in enumerate(shape) if n == 1 and grad.shape[i] != 1)
    if axes:
        grad = grad.sum(axis=axes, keepdims=True)

    return grad.reshape(shape)


def check_broadcast(a: tuple[int, ...], b: tuple[int, ...]) -> None:
    r"""Validate that two shapes may be combined by an elementwise operation.

    Allowed combinations are equal shapes, a single element operand (a scalar) and
    a per-channel vector of shape [1 or N, C, 1, 1] combined with a feature map [N, C, H, W].

    Raises
    ------
    ianrelight.ShapeError
        If the shapes are incompatible.
    """

    if a == b or math.prod(a) == 1 or math.prod(b) == 1:
        return

    if len(a) == len(b) == 4:  # noqa: PLR2004
        small, large = (a, b) if math.prod(a) < math.prod(b) else (b, a)
        if small[1] == large[1] and small[2:] == (1, 1) and small[0] in (1, large[0]):
            return

    raise exceptions.ShapeError(f'Incompatible shapes {a} and {b} for an elementwise operation!')


def normalize_axes(axes: Axes, ndim: int) -> tuple[int, ...]:
    r"""Convert `axes` to a sorted tuple of non-negative axes.

    Raises
    ------
    ianrelight.ShapeError
        If an axis is out of range for a tensor of rank `ndim` or specified twice.
    """

    if axes is None:
        return tuple(range(ndim))

    _axes = (axes,) if isinstance(axes, int) else tuple(axes)
    normalized = []
    for axis in _axes:
        if not -ndim <= axis < ndim:
            raise exceptions.ShapeError(f'Axis {axis} is out of range for a tensor of rank {ndim}!')
        normalized.append(axis % ndim)

    if len(set(normalized)) != len(normalized):
        raise exceptions.ShapeError(f'Duplicate axes in {axes}!')

    return tuple(sorted(normalized))


# ==================================================================================================
# Tensor
# ==================================================================================================


class Tensor:
    r"""A dense n-dimensional array of floating point values.

    Parameters
    ----------
    data : numpy.ndarray or float or Sequence
        The values of the tensor.

    requires_grad : bool, default False
        True if the gradient of a loss with respect to the tensor should be computed.

    dtype : numpy.dtype or None, default None
        The floating point type. If None a floating point array keeps its type and
        other input is converted to the default type, see :func:`precision`.

    name : str, default ''
        An optional name, e.g. the name of a network parameter.
    """

    __array_priority__ = 1000.0

    def __init__(
        self,
        data: Any,
        requires_grad: bool = False,
        dtype: np.dtype | type[np.floating] | None = None,
        name: str = '',
        _ctx: Function | None = None,
    ) -> None:
        if dtype is None:
            is_float_array = isinstance(data, np.ndarray) and data.dtype.kind == 'f'
            dtype = data.dtype if is_float_array else _State.dtype

        self.data: np.ndarray = np.asarray(data, dtype=dtype)
        self.requires_grad = requires_grad
        self.grad: np.ndarray | None = None
        self.name = name
        self._ctx = _ctx
        self._retain_grad = False

    def __repr__(self) -> str:
        name = f', name={self.name!r}' if self.name else ''
        return (
            f'{type(self).__name__}(shape={self.shape}, dtype={self.dtype}, '
            f'requires_grad={self.requires_grad}{name})'
        )

    @property
    def shape(self) -> tuple[int, ...]:
        r"""The extents of the tensor."""
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return self.data.size

    @property
    def dtype(self) -> np.dtype:
        return self.data.dtype

    @property
    def is_leaf(self) -> bool:
        r"""True if the tensor was not produced by a recorded operation."""
        return self._ctx is None

    def numpy(self) -> np.ndarray:
        r"""Get the values of the tensor."""
        return self.data

    def item(self) -> float:
        r"""Get the value of a single element tensor."""

        if self.size != 1:
            raise exceptions.ShapeError(
                f'item() requires a single element tensor, got {self.shape}!'
            )
        return float(self.data.reshape(-1)[0])

    def detach(self) -> Tensor:
        r"""A tensor sharing the values of this tensor but excluded from the tape."""
        return Tensor(self.data, dtype=self.dtype, name=self.name)

    def zero_grad(self) -> None:
        r"""Reset the accumulated gradient."""
        self.grad = None

    def retain_grad(self) -> None:
        r"""Keep the gradient of a non-leaf tensor after :func:`backward`."""
        self._retain_grad = True

    def backward(self) -> None:
        r"""Backpropagate from this scalar tensor, see :func:`backward`."""
        backward(self)

    def _accumulate(self, grad: np.ndarray) -> None:
        grad = grad.astype(self.dtype, copy=False)
        self.grad = grad.copy() if self.grad is None else self.grad + grad

    # Operators
    # ----------------------------------------------------------------------------------------------

    def __add__(self, other: Operand) -> Tensor:
        return ew_binary('add', self, other)

    def __radd__(self, other: Operand) -> Tensor:
        return ew_binary('add', other, self)

    def __sub__(self, other: Operand) -> Tensor:
        return ew_binary('sub', self, other)

    def __rsub__(self, other: Operand) -> Tensor:
        return ew_binary('sub', other, self)

    def __mul__(self, other: Operand) -> Tensor:
        return ew_binary('mul', self, other)

    def __rmul__(self, other: Operand) -> Tensor:
        return ew_binary('mul', other, self)

    def __truediv__(self, other: Operand) -> Tensor:
        return ew_binary('div', self, other)

    def __rtruediv__(self, other: Operand) -> Tensor:
        return ew_binary('div', other, self)

    def __neg__(self) -> Tensor:
        return Neg.apply(self)

    def __matmul__(self, other: Tensor) -> Tensor:
        return matmul(self, other)

    def __getitem__(self, index: Any) -> Tensor:
        return GetItem.apply(self, index=index)

    # Methods
    # ----------------------------------------------------------------------------------------------

    def sum(self, axes: Axes = None, keepdims: bool = False) -> Tensor:
        return reduce('sum', self, axes=axes, keepdims=keepdims)

    def mean(self, axes: Axes = None, keepdims: bool = False) -> Tensor:
        return reduce('mean', self, axes=axes, keepdims=keepdims)

    def reshape(self, *shape: int) -> Tensor:
        _shape = shape[0] if len(shape) == 1 and isinstance(shape[0], tuple | list) else shape
        return Reshape.apply(self, shape=tuple(_shape))

    def transpose(self, *axes: int) -> Tensor:
        return Transpose.apply(self, axes=axes or None)

    @property
    def T(self) -> Tensor:  # noqa: N802
        return self.transpose()

    def sqrt(self) -> Tensor:
        return Sqrt.apply(self)

    def abs(self) -> Tensor:
        return Abs.apply(self)


def make_tensor(
    shape: Sequence[int],
    data: Sequence[float] | np.ndarray,
    requires_grad: bool = False,
    dtype: np.dtype | type[np.floating] | None = None,
) -> Tensor:
    r"""Create a tensor from a flat sequence of values in row-major order.

    Parameters
    ----------
    shape : Sequence[int]
        The positive extents of the tensor.

    data : Sequence[float] or numpy.ndarray
        The values. The length must equal the product of `shape`.

    requires_grad : bool, default False
        True if the tensor should take part in backpropagation.

    dtype : numpy.dtype or None, default None
        The floating point type. If None the default type is used.

    Returns
    -------
    ianrelight.tensor.Tensor
        The created tensor.

    Raises
    ------
    ianrelight.ShapeError
        If the extents are not positive or the length of `data` does not match `shape`.
    """

    _shape = tuple(int(n) for n in shape)
    if any(n <= 0 for n in _shape):
        raise exceptions.ShapeError(f'The extents of a tensor must be positive, got {_shape}!')

    flat = np.asarray(data, dtype=_State.dtype if dtype is None else dtype).reshape(-1)
    if flat.size != math.prod(_shape):
        raise exceptions.ShapeError(
            f'The data length ({flat.size}) does not match the shape {_shape} '
            f'({math.prod(_shape)} elements)!'
        )

    return Tensor(flat.reshape(_shape).copy(), requires_grad=requires_grad)


def as_tensor(value: Operand | np.ndarray, like: Tensor | None = None) -> Tensor:
    r"""Convert `value` to a tensor, matching the dtype of `like` for plain numbers."""

    if isinstance(value, Tensor):
        return value

    dtype = like.dtype if like is not None and not isinstance(value, np.ndarray) else None
    return Tensor(value, dtype=dtype)


# ==================================================================================================
# Tape
# ==================================================================================================


class Function:
    r"""The base class of a differentiable operation.

    Subclasses implement :meth:`forward` on numpy arrays and :meth:`backward`, which maps the
    gradient of the output to the gradients of the inputs. State needed by the backward pass is
    stored on the instance.

    Parameters
    ----------
    *inputs : ianrelight.tensor.Tensor
        The input tensors of the operation.
    """

    def __init__(self, *inputs: Tensor) -> None:
        self.inputs = inputs
        self.needs_input_grad = tuple(t.requires_grad for t in inputs)

    def forward(self, *args: Any, **kwargs: Any) -> np.ndarray:
        raise NotImplementedError

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        raise NotImplementedError

    @classmethod
    def apply(cls, *inputs: Tensor, **kwargs: Any) -> Tensor:
        r"""Run the operation and record it on the output if a gradient is required."""

        ctx = cls(*inputs)
        data = ctx.forward(*(t.data for t in inputs), **kwargs)
        requires_grad = _State.grad_enabled and any(ctx.needs_input_grad)

        return Tensor(data, requires_grad=requires_grad, _ctx=ctx if requires_grad else None)


class Tape:
    r"""The recorded operations leading to an output tensor in topological order.

    Each tensor appears after all tensors it was computed from.

    Parameters
    ----------
    nodes : list[ianrelight.tensor.Tensor]
        The tensors of the graph in topological order, the output last.
    """

    def __init__(self, nodes: list[Tensor]) -> None:
        self.nodes = nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[Tensor]:
        return iter(self.nodes)

    @classmethod
    def from_output(cls, output: Tensor) -> Tape:
        r"""Collect the graph of `output` with an iterative depth-first post-order traversal."""

        nodes: list[Tensor] = []
        visited: set[int] = set()
        stack: list[tuple[Tensor, bool]] = [(output, False)]

        while stack:
            node, expanded = stack.pop()
            if expanded:
                nodes.append(node)
                continue
            if id(node) in visited:
                continue

            visited.add(id(node))
            stack.append((node, True))
            if node._ctx is not None:
                stack.extend((t, False) for t in node._ctx.inputs if t.requires_grad)

        return cls(nodes)

    def run(self, seed: np.ndarray) -> None:
        r"""Propagate `seed`, the gradient of the last node, through the tape."""

        grads: dict[int, np.ndarray] = {id(self.nodes[-1]): seed}

        for node in reversed(self.nodes):
            grad = grads.pop(id(node), None)
            if grad is None:
                continue

            if node._ctx is None:
                node._accumulate(grad)
                continue

            if node._retain_grad:
                node._accumulate(grad)

            input_grads = node._ctx.backward(grad)
            for inp, input_grad in zip(node._ctx.inputs, input_grads, strict=True):
                if input_grad is None or not inp.requires_grad:
                    continue
                key = id(inp)
                grads[key] = input_grad if key not in grads else grads[key] + input_grad


def backward(loss: Tensor) -> None:
    r"""Compute the gradient of a scalar loss with respect to every tensor on its tape.

    The gradients are accumulated into :attr:`Tensor.grad` of the leaf tensors that require
    a gradient. Repeated calls accumulate until :meth:`Tensor.zero_grad` is called.

    Raises
    ------
    ianrelight.TensorError
        If `loss` has more than one element.
    """

    if loss.size != 1:
        raise exceptions.TensorError(f'backward requires a scalar loss, got shape {loss.shape}!')

    if not loss.requires_grad:
        return

    tape = Tape.from_output(loss)
    logger.debug(f'Backpropagating through a tape of {len(tape)} tensors.')
    tape.run(seed=np.ones_like(loss.data))


# ==================================================================================================
# Operations
# ==================================================================================================


class Add(Function):
    def forward(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.shapes = a.shape, b.shape
        return a + b

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        sa, sb = self.shapes
        return unbroadcast(grad, sa), unbroadcast(grad, sb)


class Sub(Function):
    def forward(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.shapes = a.shape, b.shape
        return a - b

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        sa, sb = self.shapes
        return unbroadcast(grad, sa), unbroadcast(-grad, sb)


class Mul(Function):
    def forward(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.a, self.b = a, b
        return a * b

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        ga = unbroadcast(grad * self.b, self.a.shape) if self.needs_input_grad[0] else None
        gb = unbroadcast(grad * self.a, self.b.shape) if self.needs_input_grad[1] else None
        return ga, gb


class Div(Function):
    def forward(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.a, self.b = a, b
        return a / b

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        ga = unbroadcast(grad / self.b, self.a.shape) if self.needs_input_grad[0] else None
        gb = (
            unbroadcast(-grad * self.a / (self.b * self.b), self.b.shape)
            if self.needs_input_grad[1]
            else None
        )
        return ga, gb


_BINARY: dict[str, type[Function]] = {'add': Add, 'sub': Sub, 'mul': Mul, 'div': Div}


def ew_binary(kind: BinaryKind, a: Operand, b: Operand) -> Tensor:
    r"""Apply an elementwise binary operation.

    Parameters
    ----------
    kind : {'add', 'sub', 'mul', 'div'}
        The operation.

    a, b : ianrelight.tensor.Tensor or float
        The operands. Plain numbers are converted to tensors of the other operand's type.
        See :func:`check_broadcast` for the supported shape combinations.

    Returns
    -------
    ianrelight.tensor.Tensor
        The elementwise result.

    Raises
    ------
    ianrelight.ShapeError
        If the shapes are incompatible.

    ianrelight.TensorError
        If `kind` is not a supported operation.
    """

    func = _BINARY.get(kind)
    if func is None:
        raise exceptions.TensorError(f'Unsupported elementwise operation "{kind}"!')

    like = a if isinstance(a, Tensor) else b if isinstance(b, Tensor) else None
    ta, tb = as_tensor(a, like=like), as_tensor(b, like=like)
    check_broadcast(ta.shape, tb.shape)

    return func.apply(ta, tb)


class Neg(Function):
    def forward(self, a: np.ndarray) -> np.ndarray:
        return -a

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return (-grad,)


class MatMul(Function):
    def forward(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.a, self.b = a, b
        return a @ b

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        ga = grad @ self.b.T if self.needs_input_grad[0] else None
        gb = self.a.T @ grad if self.needs_input_grad[1] else None
        return ga, gb


def matmul(a: Tensor, b: Tensor) -> Tensor:
    r"""The matrix product of two rank-2 tensors.

    Raises
    ------
    ianrelight.ShapeError
        If an operand is not of rank 2 or the inner extents differ.
    """

    if a.ndim != 2 or b.ndim != 2:  # noqa: PLR2004
        raise exceptions.ShapeError(f'matmul requires rank-2 tensors, got {a.shape} and {b.shape}!')
    if a.shape[1] != b.shape[0]:
        raise exceptions.ShapeError(f'Inner extents of {a.shape} and {b.shape} do not match!')

    return MatMul.apply(a, b)


class Sum(Function):
    def forward(self, a: np.ndarray, axes: tuple[int, ...], keepdims: bool) -> np.ndarray:
        self.shape, self.axes, self.keepdims = a.shape, axes, keepdims
        return np.asarray(a.sum(axis=axes, keepdims=keepdims))

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        if not self.keepdims:
            grad = np.expand_dims(grad, self.axes)
        return (np.broadcast_to(grad, self.shape),)


class Mean(Function):
    def forward(self, a: np.ndarray, axes: tuple[int, ...], keepdims: bool) -> np.ndarray:
        self.shape, self.axes, self.keepdims = a.shape, axes, keepdims
        self.count = math.prod(a.shape[i] for i in axes)
        return np.asarray(a.mean(axis=axes, keepdims=keepdims))

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        if not self.keepdims:
            grad = np.expand_dims(grad, self.axes)
        return (np.broadcast_to(grad / self.count, self.shape),)


def reduce(
    kind: Literal['sum', 'mean'], t: Tensor, axes: Axes = None, keepdims: bool = False
) -> Tensor:
    r"""Reduce a tensor by summation or averaging over `axes` (all axes if None).

    Raises
    ------
    ianrelight.ShapeError
        If an axis is invalid for the rank of `t`.
    """

    _axes = normalize_axes(axes, t.ndim)
    func = Sum if kind == 'sum' else Mean
    return func.apply(t, axes=_axes, keepdims=keepdims)


class Reshape(Function):
    def forward(self, a: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
        self.shape = a.shape
        try:
            return a.reshape(shape)
        except ValueError:
            raise exceptions.ShapeError(f'Cannot reshape {a.shape} to {shape}!') from None

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return (grad.reshape(self.shape),)


class Transpose(Function):
    def forward(self, a: np.ndarray, axes: tuple[int, ...] | None) -> np.ndarray:
        self.axes = tuple(reversed(range(a.ndim))) if axes is None else axes
        return a.transpose(self.axes)

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return (grad.transpose(np.argsort(self.axes)),)


class GetItem(Function):
    def forward(self, a: np.ndarray, index: Any) -> np.ndarray:
        self.shape, self.dtype, self.index = a.shape, a.dtype, index
        return a[index]

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        out = np.zeros(self.shape, dtype=self.dtype)
        out[self.index] += grad
        return (out,)


class Concat(Function):
    def forward(self, *arrays: np.ndarray, axis: int) -> np.ndarray:
        self.axis = axis
        self.splits = np.cumsum([a.shape[axis] for a in arrays])[:-1]
        return np.concatenate(arrays, axis=axis)

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return tuple(np.split(grad, self.splits, axis=self.axis))


def concat(tensors: Sequence[Tensor], axis: int = 1) -> Tensor:
    r"""Concatenate tensors along `axis`, keeping their order.

    Raises
    ------
    ianrelight.ShapeError
        If no tensors are given or the extents of the other axes differ.
    """

    if not tensors:
        raise exceptions.ShapeError('Cannot concatenate an empty sequence of tensors!')

    (axis,) = normalize_axes(axis, tensors[0].ndim)
    reference = tensors[0].shape[:axis] + tensors[0].shape[axis + 1 :]
    for t in tensors[1:]:
        if t.ndim != tensors[0].ndim or t.shape[:axis] + t.shape[axis + 1 :] != reference:
            raise exceptions.ShapeError(
                f'Cannot concatenate {tensors[0].shape} and {t.shape} along axis {axis}!'
            )

    if len(tensors) == 1:
        return tensors[0]

    return Concat.apply(*tensors, axis=axis)


class Sqrt(Function):
    def forward(self, a: np.ndarray) -> np.ndarray:
        self.out = np.sqrt(a)
        return self.out

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return (grad / (2 * self.out),)


class Abs(Function):
    def forward(self, a: np.ndarray) -> np.ndarray:
        self.sign = np.sign(a)
        return np.abs(a)

    def backward(self, grad: np.ndarray) -> tuple[np.ndarray | None, ...]:
        return (grad * self.sign,)

# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The tensor and its reverse-mode automatic differentiation."""

from ianrelight.tensor.core import (
    Function,
    Tape,
    Tensor,
    as_tensor,
    backward,
    concat,
    ew_binary,
    get_default_dtype,
    is_grad_enabled,
    make_tensor,
    matmul,
    no_grad,
    precision,
    reduce,
)
from ianrelight.tensor.gradcheck import (
    GradCheckResult,
    check_gradients,
    finite_diff_grad,
    relative_error,
    spot_check,
)

# The Public API
__all__ = [
    # core
    'Function',
    'Tape',
    'Tensor',
    'as_tensor',
    'backward',
    'concat',
    'ew_binary',
    'get_default_dtype',
    'is_grad_enabled',
    'make_tensor',
    'matmul',
    'no_grad',
    'precision',
    'reduce',
    # gradcheck
    'GradCheckResult',
    'check_gradients',
    'finite_diff_grad',
    'relative_error',
    'spot_check',
]

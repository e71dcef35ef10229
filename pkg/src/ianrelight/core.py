# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The core functionality of the package."""

# Standard library
from collections.abc import Iterable
from typing import NamedTuple


class OperationResult(NamedTuple):
    r"""The result of a function or method call.

    Should be returned from a function or method call to provide
    context whether the operation was successful or not.

    Parameters
    ----------
    ok : bool, default True
        True if the operation was successful and False otherwise.

    short_msg : str, default ''
        A short optional message that describes the reason for the result.
        Safe to display to the user.

    long_msg : str, default ''
        A longer message that further describes the result.

    code : str or None, default None
        An optional machine-friendly code to better understand the result.
    """

    ok: bool = True
    short_msg: str = ''
    long_msg: str = ''
    code: str | None = None


def has_required_keys(keys: Iterable[str], required_keys: Iterable[str]) -> OperationResult:
    r"""Check if the supplied keys contain the required keys.

    Parameters
    ----------
    keys : Iterable[str]
        The keys to analyze, e.g. the parameter names stored in a checkpoint.

    required_keys : Iterable[str]
        The keys that must exist in `keys`.

    Returns
    -------
    result : ianrelight.core.OperationResult
        The result of the validation.
    """

    available, required = set(keys), set(required_keys)

    if missing := required.difference(available):
        short_msg = f'Missing {len(missing)} required key(s)!'
        long_msg = (
            f'{short_msg}\n'
            f'Missing required keys : {tuple(sorted(missing))[:10]}\n'
            f'Nr of required keys   : {len(required)}\n'
            f'Nr of available keys  : {len(available)}'
        )
        return OperationResult(ok=False, short_msg=short_msg, long_msg=long_msg, code='missing')

    if unexpected := available.difference(required):
        short_msg = f'Found {len(unexpected)} unexpected key(s)!'
        long_msg = f'{short_msg}\nUnexpected keys : {tuple(sorted(unexpected))[:10]}'
        return OperationResult(ok=False, short_msg=short_msg, long_msg=long_msg, code='unexpected')

    return OperationResult(ok=True)

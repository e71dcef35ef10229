# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Metadata about the IANRelight package."""

# Standard library
from datetime import date

__versiontuple__ = (0, 1, 0)
r"""The version of IANRelight in a comparable form.
Adheres to `Semantic Versioning <https://semver.org/spec/v2.0.0.html>`_
(MAJOR.MINOR.PATCH).
"""

__version__ = '0.1.0'
r"""The IANRelight version string."""

__releasedate__ = date(2026, 10, 18)
r"""The release date of the version specified in :data:`__versiontuple__`."""

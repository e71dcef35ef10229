# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Execute the IANRelight CLI as `python -m ianrelight`."""

# Local
from ianrelight.cli.main import main

if __name__ == '__main__':
    main()

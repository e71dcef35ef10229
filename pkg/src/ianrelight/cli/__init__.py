# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The IANRelight CLI (ianrelight) for generating data, training and relighting images."""

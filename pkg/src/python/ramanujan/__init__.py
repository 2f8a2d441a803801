# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""RAMANUJAN package"""

from ._version import __version__, copyright, license
from . import exact, model, io, qseries, symplectic, gaussmanin, vectorfields, formal, flow
from . import app

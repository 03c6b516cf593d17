# Copyright (c) the vertexlearn contributors.
# SPDX-License-Identifier: Apache-2.0
"""Learning and teaching vertex-set concepts in graphs.

Thin re-export of the compiled extension; see the package README for usage.
"""

from vertexlearn._core import *  # noqa: F401,F403
from vertexlearn._core import __version__  # noqa: F401

"""Bounds, certificates and exact oracles for the choice number of complete
multipartite graphs."""

from ._core import *  # noqa: F401,F403
from ._core import MpchoiceError, __version__  # noqa: F401

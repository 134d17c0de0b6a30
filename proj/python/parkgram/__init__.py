"""Exact enumeration of vector parking functions and the grammar-derivative engine."""

from parkgram._core import *  # noqa: F401,F403
from parkgram._core import __version__  # noqa: F401

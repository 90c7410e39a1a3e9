"""Renyi entropies, sharp Shannon-entropy bounds from H2/H3, and heuristic
extrapolations, backed by a C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import EntropyError, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]

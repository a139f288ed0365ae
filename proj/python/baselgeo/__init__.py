"""Verification toolkit for an area-preserving triangle coordinate atlas."""

from . import _core
from ._core import *  # noqa: F401,F403

__version__ = _core.__version__
__all__ = [name for name in dir(_core) if not name.startswith("_")]

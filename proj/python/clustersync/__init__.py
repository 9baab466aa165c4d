"""Cluster synchronization toolkit: structural checks, synchronizability
spectra, and fixed/adaptive coupled-network simulation."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"

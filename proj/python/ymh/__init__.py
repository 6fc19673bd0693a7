"""Pseudo-spectral simulation of incompressible charged ideal fluids on flat tori."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

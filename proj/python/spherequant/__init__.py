"""Intrinsic quantization of probability measures on spheres and spherical curves."""

from spherequant._core import *  # noqa: F401,F403
from spherequant._core import __doc__  # noqa: F401

__version__ = "0.1.0"

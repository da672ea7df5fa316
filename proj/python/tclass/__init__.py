"""Negative-coefficient analytic function classes: coefficient criteria,
extremal functions, radii, Bernardi transforms, Hadamard-product parameters
and a disc-sampling oracle."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

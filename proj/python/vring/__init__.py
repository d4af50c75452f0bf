"""Classical and quantum dynamics of small oscillations of a vortex ring."""

from vring._core import *  # noqa: F401,F403
from vring._core import __doc__  # noqa: F401

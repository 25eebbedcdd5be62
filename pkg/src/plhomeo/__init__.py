"""Exact rational PL homeomorphisms of the line, the circle and skew products of the plane."""

from .actions import *  # noqa: F401,F403
from .circle import *  # noqa: F401,F403
from .generators import *  # noqa: F401,F403
from .pl import *  # noqa: F401,F403
from .serialize import *  # noqa: F401,F403
from .skew import *  # noqa: F401,F403
from .verify import *  # noqa: F401,F403
from .words import *  # noqa: F401,F403
from . import actions, circle, generators, pl, serialize, skew, verify, words

__version__ = "0.1.0"

__all__ = (
    pl.__all__
    + skew.__all__
    + generators.__all__
    + words.__all__
    + circle.__all__
    + actions.__all__
    + serialize.__all__
    + verify.__all__
)

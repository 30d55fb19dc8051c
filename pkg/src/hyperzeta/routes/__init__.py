"""Independent ways of computing the zeta reciprocal of a hypergraph."""

from .base import ValidationError, ZetaRoute
from .bass import BassRoute
from .hashimoto import HashimotoExponentError, HashimotoRoute
from .linegraph import LineGraphRoute

__all__ = [
    "BassRoute",
    "HashimotoExponentError",
    "HashimotoRoute",
    "LineGraphRoute",
    "ValidationError",
    "ZetaRoute",
]

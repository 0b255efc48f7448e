"""Hausdorff and similarity dimensions of self-similar sets."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    HausdimError,
    InvalidArgument,
    NumericalFailure,
    ParseError,
    Unsupported,
)

__version__ = "0.1.0"

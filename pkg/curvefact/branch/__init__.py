from .standard import *  # noqa: F403
from .values import *  # noqa: F403
from .puiseux import *  # noqa: F403

__all__ = (
    standard.__all__  # noqa: F405
    + values.__all__  # noqa: F405
    + puiseux.__all__  # noqa: F405
)

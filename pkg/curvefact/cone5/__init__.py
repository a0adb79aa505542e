from .secant import *  # noqa: F403
from .planes import *  # noqa: F403

__all__ = secant.__all__ + planes.__all__  # noqa: F405

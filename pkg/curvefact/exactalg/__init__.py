from .series import *  # noqa: F403
from .mpoly import *  # noqa: F403
from .matrices import *  # noqa: F403
from .linalg import *  # noqa: F403

__all__ = (
    series.__all__  # noqa: F405
    + mpoly.__all__  # noqa: F405
    + matrices.__all__  # noqa: F405
    + linalg.__all__  # noqa: F405
)

from .planar import *  # noqa: F403
from .implicit import *  # noqa: F403
from .fibres import *  # noqa: F403

__all__ = (
    planar.__all__  # noqa: F405
    + implicit.__all__  # noqa: F405
    + fibres.__all__  # noqa: F405
)

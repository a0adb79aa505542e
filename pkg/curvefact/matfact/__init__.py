from .generators import *  # noqa: F403
from .syzygy import *  # noqa: F403
from .verify import *  # noqa: F403
from .construct import *  # noqa: F403
from .algebra import *  # noqa: F403
from .generic import *  # noqa: F403
from .equivalence import *  # noqa: F403

__all__ = (
    generators.__all__  # noqa: F405
    + syzygy.__all__  # noqa: F405
    + verify.__all__  # noqa: F405
    + construct.__all__  # noqa: F405
    + algebra.__all__  # noqa: F405
    + generic.__all__  # noqa: F405
    + equivalence.__all__  # noqa: F405
)

# pylint: disable=undefined-variable
from .utils import *  # noqa: F403
from .branch import *  # noqa: F403
from .semigroup import *  # noqa: F403
from .cone import *  # noqa: F403
from .equation import *  # noqa: F403
from .matfact import *  # noqa: F403
from .files import *  # noqa: F403
from .report import *  # noqa: F403

__all__ = (
    utils.__all__  # noqa: F405
    + branch.__all__  # noqa: F405
    + semigroup.__all__  # noqa: F405
    + cone.__all__  # noqa: F405
    + equation.__all__  # noqa: F405
    + matfact.__all__  # noqa: F405
    + files.__all__  # noqa: F405
    + report.__all__  # noqa: F405
)

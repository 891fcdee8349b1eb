from . import rootsys
from .rootsys import *  # pylint: disable=wildcard-import
from . import liealg
from .liealg import *  # pylint: disable=wildcard-import
from . import sl2kit
from .sl2kit import *  # pylint: disable=wildcard-import
from . import satake
from .satake import *  # pylint: disable=wildcard-import
from . import contactize
from .contactize import *  # pylint: disable=wildcard-import
from . import report
from .report import *  # pylint: disable=wildcard-import
from . import config
from .serializer import Serializer
from . import serializer


# Only expose whatever is listed in modules' __all__ to top level.
__all__ = ["config", "Serializer"]  # Entire `config` module is available, mainly for the global CONFIG
__all__ += rootsys.__all__
__all__ += liealg.__all__
__all__ += sl2kit.__all__
__all__ += satake.__all__
__all__ += contactize.__all__
__all__ += report.__all__

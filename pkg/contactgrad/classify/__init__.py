from . import census
from .census import *  # pylint: disable=wildcard-import
from . import tables
from .tables import *  # pylint: disable=wildcard-import

__all__ = []  # type: list
__all__ += census.__all__
__all__ += tables.__all__

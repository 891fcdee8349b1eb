from .__version__ import __version__  # Conform to PEP-0396

# The contents of the following is imported to module level, with __all__ extended with their respective __all__
# These should be `del` later to clean the namespace
from . import core
from .core import *  # pylint: disable=wildcard-import
from . import classify
from .classify import *  # pylint: disable=wildcard-import

# The following are available as is; written explicitly also in __all__
from . import exceptions
from .__utils__ import parse_algebra, algebra_names


# Only make the following available by default
__all__ = ["__version__", "exceptions", "config", "parse_algebra", "algebra_names"]
__all__ += core.__all__
__all__ += classify.__all__

# Clean-up (make `contactgrad.core`, etc unavailable)
del core
del classify

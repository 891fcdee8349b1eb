from .base import *  # pylint: disable=wildcard-import
from .chevalley import *  # pylint: disable=wildcard-import
from .classical import *  # pylint: disable=wildcard-import
from .constructions import *  # pylint: disable=wildcard-import

__all__ = []  # type: ignore
__all__ += base.__all__  # type: ignore  # pylint: disable=undefined-variable
__all__ += chevalley.__all__  # type: ignore  # pylint: disable=undefined-variable
__all__ += classical.__all__  # type: ignore  # pylint: disable=undefined-variable
__all__ += constructions.__all__  # type: ignore  # pylint: disable=undefined-variable

classical_real_form = classical_form  # pylint: disable=undefined-variable
__all__ += ["classical_real_form"]

"""Algebra names used on the command line, e.g. "g2-split", "su(1,2)", "sl(2,R)+sl(2,R)" or "sl2(C)-real"."""
import logging
import re
from typing import Callable, List, Tuple

from .core.liealg import LieAlgebra, chevalley_algebra, classical_form, direct_sum, realify, split_real_form
from .exceptions import UnknownAlgebraException

__all__ = ["parse_algebra", "algebra_names"]

LOGGER = logging.getLogger(__name__)

REAL_SUFFIX = "-real"


def _int(value: str) -> int:
    return int(value)


def _even(size: str) -> int:
    value = int(size)
    if value % 2:
        raise UnknownAlgebraException("odd size {size}".format(size=size))
    return value // 2


_REGISTRY = [
    (r"([a-g])(\d+)-split", lambda m: split_real_form(m.group(1).upper(), _int(m.group(2)))),
    (r"([a-g])(\d+)\(C\)", lambda m: chevalley_algebra(m.group(1).upper(), _int(m.group(2)))),
    (r"sl(\d+)\(C\)", lambda m: chevalley_algebra('A', _int(m.group(1)) - 1)),
    (r"sl\((\d+),R\)", lambda m: classical_form('sl_R', n=_int(m.group(1)))),
    (r"sl\((\d+),C\)", lambda m: classical_form('sl_C', n=_int(m.group(1)))),
    (r"su\((\d+),(\d+)\)", lambda m: classical_form('su', p=_int(m.group(1)), q=_int(m.group(2)))),
    (r"su\((\d+)\)", lambda m: classical_form('su', p=_int(m.group(1)), q=0)),
    (r"su\*\((\d+)\)", lambda m: classical_form('su_star', n=_even(m.group(1)))),
    (r"so\((\d+),C\)", lambda m: classical_form('so_C', n=_int(m.group(1)))),
    (r"so\((\d+),(\d+)\)", lambda m: classical_form('so', p=_int(m.group(1)), q=_int(m.group(2)))),
    (r"so\((\d+)\)", lambda m: classical_form('so', p=_int(m.group(1)), q=0)),
    (r"so\*\((\d+)\)", lambda m: classical_form('so_star', n=_even(m.group(1)))),
    (r"sp\((\d+),R\)", lambda m: classical_form('sp_R', n=_int(m.group(1)))),
    (r"sp\((\d+),C\)", lambda m: classical_form('sp_C', n=_int(m.group(1)))),
    (r"sp\((\d+),(\d+)\)", lambda m: classical_form('sp', p=_int(m.group(1)), q=_int(m.group(2)))),
    (r"sp\((\d+)\)", lambda m: classical_form('sp', p=_int(m.group(1)), q=0)),
]  # type: List[Tuple[str, Callable]]

_COMPILED = [(re.compile("^" + pattern + "$"), build) for pattern, build in _REGISTRY]


def parse_algebra(name: str) -> LieAlgebra:
    """
    Builds the Lie algebra named by `name`. Summands joined by "+" give a direct sum; the suffix "-real" views a
    complex algebra as a real one.
    :raises UnknownAlgebraException: the name matches no known pattern
    :raises InvalidRealFormException: the pattern matched with invalid parameters
    """
    compact_name = name.replace(" ", "")
    if not compact_name:
        raise UnknownAlgebraException(name)
    if "+" in compact_name:
        return direct_sum(*(parse_algebra(part) for part in compact_name.split("+")))
    if compact_name.endswith(REAL_SUFFIX):
        return realify(parse_algebra(compact_name[:-len(REAL_SUFFIX)]))
    for pattern, build in _COMPILED:
        match = pattern.match(compact_name)
        if match:
            LOGGER.debug("Parsed algebra name %s", compact_name)
            return build(match)
    raise UnknownAlgebraException(name)


def algebra_names() -> List[str]:
    """Representative names accepted by parse_algebra."""
    return ["g2-split", "e6-split", "a3-split", "g2(C)", "sl2(C)-real", "sl(2,R)+sl(2,R)", "sl(3,R)", "su(1,2)",
            "su*(4)", "so(2,3)", "so*(6)", "sp(2,R)", "sp(1,1)", "sl(3,C)", "so(5,C)", "sp(2,C)"]

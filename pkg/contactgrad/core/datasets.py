"""Loading, validation and expression evaluation for the curated YAML datasets."""
import logging
import re
from fractions import Fraction
from functools import lru_cache
from keyword import iskeyword
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema
import yaml
from sympy import Basic, Eq, Float, Integer, Mod, Ne, Rational, Symbol, floor
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from ..exceptions import DatasetValidationException
from .config import get_config

LOGGER = logging.getLogger(__name__)

# Do not expose anything by default (internal module)
__all__ = []  # type: List[str]

_ROWS = {"type": "array", "items": {"type": "object"}}

SCHEMAS = {
    "satake": {"type": "object", "required": ["version", "families", "exceptional", "complex"],
               "properties": {"version": {"type": "integer"},
                              "families": {"type": "array", "items": {
                                  "type": "object", "required": ["label", "type", "name", "white"]}},
                              "exceptional": {"type": "array", "items": {
                                  "type": "object", "required": ["name", "label", "type", "rank", "black"]}},
                              "complex": {"type": "object"}}},
    "real_form_census": {"type": "object", "required": ["version", "counts"],
                         "properties": {"version": {"type": "integer"}, "counts": {"type": "object"}}},
    "symmetric_pairs": {"type": "object", "required": ["version", "algebras"],
                        "properties": {"version": {"type": "integer"}, "algebras": {"type": "object"}}},
}

DEFAULT_SCHEMA = {"type": "object", "required": ["version", "rows"],
                  "properties": {"version": {"type": "integer"}, "rows": _ROWS}}


def dataset_path(name: str, data_dir: Optional[Path] = None) -> Path:
    return (data_dir or get_config().data_dir).joinpath("{name}.yaml".format(name=name))


@lru_cache(maxsize=None)
def _load(path: Path, name: str) -> Dict[str, Any]:
    if not path.is_file():
        raise DatasetValidationException(path, "file not found")
    with path.open('r') as file:
        content = yaml.safe_load(file.read())
    try:
        jsonschema.validate(content, SCHEMAS.get(name, DEFAULT_SCHEMA))
    except jsonschema.ValidationError as ex:
        raise DatasetValidationException(path, ex.message)
    LOGGER.debug("Loaded dataset %s (version %s)", path, content.get("version"))
    return content


def load_dataset(name: str, data_dir: Optional[Path] = None) -> Dict[str, Any]:
    """
    Reads and validates `<data dir>/<name>.yaml`.
    :raises DatasetValidationException: missing file or schema violation
    """
    return _load(dataset_path(name, data_dir), name)


_NAME = re.compile(r"[A-Za-z_]\w*")
_CALL = re.compile(r"([A-Za-z_]\w*)\s*\(")
_CHARACTERS = re.compile(r"^[\w\s+\-*/%()<>=!&|~,]*$")
_FUNCTIONS = {"Eq": Eq, "Ne": Ne, "Mod": Mod, "floor": floor}
_CONSTANTS = {"True", "False"}


def parse(expression: Any, constants: Optional[Dict[str, Any]] = None) -> Any:
    """
    Parses a dataset expression: integers, identifiers, arithmetic, comparisons, `&`, `|`, `~` and the functions
    Eq, Ne, Mod and floor. Identifiers become symbols unless `constants` names them; nothing else is resolved.
    :raises ValueError: any other construct
    """
    text = str(expression)
    names = set(_NAME.findall(text)) - _CONSTANTS
    if not _CHARACTERS.match(text) or any(name.startswith('_') or iskeyword(name) for name in names) \
            or not set(_CALL.findall(text)) <= set(_FUNCTIONS):
        raise ValueError("Unsupported expression {expr!r}".format(expr=text))
    local_dict = {name: Symbol(name) for name in names if name not in _FUNCTIONS}
    local_dict.update((name, value) for name, value in (constants or {}).items() if name in names)
    global_dict = dict(_FUNCTIONS, Integer=Integer, Rational=Rational, Float=Float, __builtins__={})
    try:
        return parse_expr(text, local_dict=local_dict, global_dict=global_dict,
                          transformations=standard_transformations)
    except (SyntaxError, NameError, TypeError) as ex:
        raise ValueError("Unsupported expression {expr!r}: {ex}".format(expr=text, ex=ex))


def evaluate(expression: Any, **values) -> Any:
    """Evaluates an arithmetic expression such as "(n-2)**2" at the given integer values; exact result."""
    if isinstance(expression, (int, Fraction)):
        return expression
    result = parse(expression)
    if isinstance(result, Basic):
        result = result.subs(values)
    if getattr(result, 'is_Integer', False):
        return int(result)
    if getattr(result, 'is_Rational', False):
        return Fraction(int(result.p), int(result.q))
    raise ValueError("Expression {expr} did not evaluate to a number at {values}".format(expr=expression,
                                                                                       values=values))


def holds(predicate: Any, **values) -> bool:
    """Evaluates a predicate such as "(p >= 2) & (q >= 2)"; `&`, `|`, `Eq`, `Ne` and `Mod` are available."""
    if isinstance(predicate, bool):
        return predicate
    result = parse(predicate)
    if isinstance(result, bool):
        return result
    return bool(result.subs(values))

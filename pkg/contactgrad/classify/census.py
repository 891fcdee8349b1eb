"""Symmetric subalgebras of the complex simple Lie algebras, by summand type."""
import logging
import re
from typing import Any, Dict, Iterator, List, Optional, Set, Tuple

from ..core.datasets import evaluate, holds, load_dataset
from ..core.rootsys import expected_root_count

LOGGER = logging.getLogger(__name__)

__all__ = ["SymmetricPairCensus", "load_census", "classical_summands", "summand_dim", "sl2_is_ideal"]

CENTER = "T1"

_SUMMAND = re.compile(r"^(so|sp|gl)\((.+)\)$")
_TYPE = re.compile(r"^([A-G])(\d+)$")


def summand_dim(summand: str) -> int:
    """Complex dimension of a simple type ("B4" is 36) or of the one-dimensional center T1."""
    if summand == CENTER:
        return 1
    match = _TYPE.match(summand)
    if not match:
        raise ValueError("Unknown summand type {summand}".format(summand=summand))
    type_label, rank = match.group(1), int(match.group(2))
    return expected_root_count(type_label, rank) + rank


def _orthogonal(m: int) -> List[str]:
    if m <= 1:
        return []
    low = {2: [CENTER], 3: ["A1"], 4: ["A1", "A1"], 5: ["B2"], 6: ["A3"]}
    if m in low:
        return low[m]
    return ["B{r}".format(r=(m - 1) // 2)] if m % 2 else ["D{r}".format(r=m // 2)]


def _symplectic(m: int) -> List[str]:
    if m <= 0:
        return []
    return {1: ["A1"], 2: ["B2"]}.get(m, ["C{r}".format(r=m)])


def _general_linear(m: int) -> List[str]:
    if m <= 0:
        return []
    return [CENTER] if m == 1 else ["A{r}".format(r=m - 1), CENTER]


def classical_summands(summands: List[str], trace: int = 0, **values) -> List[str]:
    """
    Simple and central summand types of a classical symmetric subalgebra, e.g. ["gl(k)", "gl(n - k)"] with trace 1
    at n=5, k=2 gives ["A1", "A2", "T1"]. `trace` central summands are dropped (s(gl + gl)).
    """
    result = []  # type: List[str]
    for summand in summands:
        match = _SUMMAND.match(summand.replace(" ", ""))
        if not match:
            raise ValueError("Unknown classical summand {summand}".format(summand=summand))
        m = evaluate(match.group(2), **values)
        result.extend({'so': _orthogonal, 'sp': _symplectic, 'gl': _general_linear}[match.group(1)](m))
    for _ in range(trace):
        result.remove(CENTER)
    return sorted(result)


def sl2_is_ideal(summands: List[str]) -> bool:
    return "A1" in summands


class SymmetricPairCensus:
    """Exceptional algebra -> [(subalgebra, summand types, dimension)], plus the classical families by rule."""

    def __init__(self, content: Dict[str, Any]):
        self.version = content["version"]
        self.pairs = {algebra: [(record["subalgebra"], list(record["summands"]), record["dim"]) for record in records]
                      for algebra, records in content["algebras"].items()}
        self.classical = content.get("classical") or {}

    def __contains__(self, algebra: str) -> bool:
        return algebra in self.pairs

    def dims(self, algebra: str) -> Set[int]:
        return {dim for _, _, dim in self.pairs.get(algebra, [])}

    def check(self) -> List[str]:
        """Subalgebras whose stated dimension differs from the sum of their summand dimensions."""
        problems = []
        for algebra, records in sorted(self.pairs.items()):
            for subalgebra, summands, dim in records:
                computed = sum(summand_dim(summand) for summand in summands)
                if computed != dim:
                    problems.append("{algebra} > {sub}: {dim} != {computed}".format(
                        algebra=algebra, sub=subalgebra, dim=dim, computed=computed))
        return problems

    def classical_members(self, family: str, n: int,
                          subalgebra: Optional[str] = None) -> Iterator[Tuple[str, Dict[str, int], List[str]]]:
        """(subalgebra, parameters, summand types) of every classical symmetric subalgebra of the family at n."""
        for record in self.classical.get(family, []):
            if subalgebra is not None and record["subalgebra"] != subalgebra:
                continue
            if not holds(record["valid"], n=n):
                continue
            ranged = record.get("range") or {}
            if ranged:
                (key, (low, high)), = ranged.items()
                choices = [{key: value} for value in range(evaluate(low, n=n), evaluate(high, n=n) + 1)]
            else:
                choices = [{}]
            for params in choices:
                yield record["subalgebra"], params, classical_summands(record["summands"], record.get("trace", 0),
                                                                         n=n, **params)

    def to_dict(self) -> Dict[str, Any]:
        return {algebra: [{"subalgebra": sub, "summands": summands, "dim": dim} for sub, summands, dim in records]
                for algebra, records in sorted(self.pairs.items())}


def load_census() -> SymmetricPairCensus:
    census = SymmetricPairCensus(load_dataset("symmetric_pairs"))
    LOGGER.debug("Symmetric pair census for %s", ", ".join(sorted(census.pairs)))
    return census

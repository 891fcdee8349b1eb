"""
Root systems of the complex simple Lie algebras A-G.

Conventions (Bourbaki numbering, nodes are 1-based in every public map or set):

* A_n: chain 1-2-...-n.
* B_n: alpha_n is the short simple root.
* C_n: alpha_1, ..., alpha_{n-1} are short, alpha_n is long.
* D_n: chain 1-...-(n-2), with n-1 and n both attached to n-2.
* E_n: chain 1-3-4-...-n, with 2 attached to 4.
* F_4: alpha_1, alpha_2 long and alpha_3, alpha_4 short.
* G_2: alpha_1 short, alpha_2 long.

Long roots have squared length 2. ``cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..__types__ import RootCoords
from ..exceptions import InvalidRootSystemException, NotARootException

LOGGER = logging.getLogger(__name__)

__all__ = ["RootSystem", "build_root_system", "highest_root_in_weights", "contact_grading_node_set",
           "depth_one_node_set", "fundamental_weight_decomposition", "simple_types"]

MIN_RANK = {'A': 1, 'B': 2, 'C': 3, 'D': 4, 'E': 6, 'F': 4, 'G': 2}
MAX_RANK = {'E': 8, 'F': 4, 'G': 2}

HALF = Fraction(1, 2)


def _simple_root_gram(type_label: str, rank: int) -> List[List[Fraction]]:
    """Inner products of the simple roots."""
    gram = [[Fraction(0)] * rank for _ in range(rank)]

    def link(i, j, value):
        gram[i - 1][j - 1] = gram[j - 1][i - 1] = Fraction(value)

    lengths = [Fraction(2)] * rank
    if type_label == 'A':
        for i in range(1, rank):
            link(i, i + 1, -1)
    elif type_label == 'B':
        lengths[rank - 1] = Fraction(1)
        for i in range(1, rank):
            link(i, i + 1, -1)
    elif type_label == 'C':
        lengths = [Fraction(1)] * (rank - 1) + [Fraction(2)]
        for i in range(1, rank - 1):
            link(i, i + 1, -HALF)
        link(rank - 1, rank, -1)
    elif type_label == 'D':
        for i in range(1, rank - 1):
            link(i, i + 1, -1)
        link(rank - 2, rank, -1)
    elif type_label == 'E':
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, rank):
            link(i, i + 1, -1)
    elif type_label == 'F':
        lengths = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        link(1, 2, -1)
        link(2, 3, -1)
        link(3, 4, -HALF)
    elif type_label == 'G':
        lengths = [Fraction(2, 3), Fraction(2)]
        link(1, 2, -1)
    for i in range(rank):
        gram[i][i] = lengths[i]
    return gram


def expected_root_count(type_label: str, rank: int) -> int:
    """Closed-form number of roots."""
    n = rank
    return {'A': n * (n + 1), 'B': 2 * n * n, 'C': 2 * n * n, 'D': 2 * n * (n - 1),
            'E': {6: 72, 7: 126, 8: 240}.get(n, 0), 'F': 48, 'G': 12}[type_label]


class RootSystem:
    """Root system of a complex simple Lie algebra, with roots in simple-root coordinates."""

    def __init__(self, type_label: str, rank: int):
        self.type_label = type_label
        self.rank = rank
        self.gram = _simple_root_gram(type_label, rank)
        self.cartan = tuple(tuple(int(2 * self.gram[i][j] / self.gram[j][j]) for j in range(rank))
                            for i in range(rank))  # type: Tuple[Tuple[int, ...], ...]
        self.positive_roots = self._generate_positive_roots()  # type: Tuple[RootCoords, ...]
        self.roots = self.positive_roots + tuple(tuple(-c for c in root) for root in self.positive_roots)
        self._index = {root: i for i, root in enumerate(self.roots)}
        self.long_length = max(self.gram[i][i] for i in range(rank))
        self.highest_root = max(self.positive_roots, key=self.height)
        short = [root for root in self.positive_roots if not self.is_long(root)]
        self.highest_short_root = max(short, key=self.height) if short else None  # type: Optional[RootCoords]
        self.dynkin_marks = {i + 1: c for i, c in enumerate(self.highest_root)}  # type: Dict[int, int]
        self.fundamental_weight_decomp_of_highest_root = fundamental_weight_decomposition(self, self.highest_root)
        LOGGER.debug("Built root system %s with %d roots", self.label, len(self.roots))

    @property
    def label(self) -> str:
        return "{type}{rank}".format(type=self.type_label, rank=self.rank)

    def __repr__(self):
        return "RootSystem({label})".format(label=self.label)

    def inner(self, left: RootCoords, right: RootCoords) -> Fraction:
        return sum((left[i] * right[j] * self.gram[i][j] for i in range(self.rank) for j in range(self.rank)
                    if left[i] and right[j]), Fraction(0))

    def coroot_pairing(self, root: RootCoords, node: int) -> int:
        """<root, alpha_node^vee> for a 1-based simple root index."""
        j = node - 1
        return sum(root[i] * self.cartan[i][j] for i in range(self.rank))

    def height(self, root: RootCoords) -> int:
        return sum(root)

    def is_root(self, coords: RootCoords) -> bool:
        return tuple(coords) in self._index

    def root_index(self, coords: RootCoords) -> int:
        try:
            return self._index[tuple(coords)]
        except KeyError:
            raise NotARootException(coords)

    def is_long(self, root: RootCoords) -> bool:
        return self.inner(root, root) == self.long_length

    def simple_root(self, node: int) -> RootCoords:
        return tuple(1 if i == node - 1 else 0 for i in range(self.rank))

    def _generate_positive_roots(self) -> Tuple[RootCoords, ...]:
        """Closure from the simple roots by root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0."""
        simple = [self.simple_root(i + 1) for i in range(self.rank)]
        known = set(simple)
        layer = list(simple)
        ordered = list(simple)
        while layer:
            next_layer = []
            for beta in layer:
                for i in range(self.rank):
                    p = 0
                    lowered = list(beta)
                    while True:
                        lowered[i] -= 1
                        if tuple(lowered) not in known:
                            break
                        p += 1
                    q = p - self.coroot_pairing(beta, i + 1)
                    if q > 0:
                        raised = tuple(c + (1 if k == i else 0) for k, c in enumerate(beta))
                        if raised not in known:
                            known.add(raised)
                            next_layer.append(raised)
            next_layer.sort()
            ordered.extend(next_layer)
            layer = next_layer
        ordered.sort(key=lambda root: (sum(root), root))
        return tuple(ordered)

    def opposition_involution(self, nodes: Optional[Iterable[int]] = None) -> Dict[int, int]:
        """
        Node permutation induced by -w0 of the subsystem spanned by `nodes` (all nodes by default). w0 is built as
        a product of simple reflections, extended while some simple root still maps to a positive root.
        """
        support = sorted(nodes) if nodes is not None else list(range(1, self.rank + 1))
        images = {j: {j: 1} for j in support}  # type: Dict[int, Dict[int, int]]
        while True:
            flip = next((i for i in support if min(images[i].values()) > 0), None)
            if flip is None:
                break
            image = images[flip]
            for j in support:
                a = self.cartan[j - 1][flip - 1]
                if a:
                    updated = dict(images[j])
                    for k, c in image.items():
                        updated[k] = updated.get(k, 0) - a * c
                    images[j] = {k: c for k, c in updated.items() if c}
        return {j: next(iter(images[j])) for j in support}

    def check_invariants(self) -> List[str]:
        """Returns a list of violated invariants (empty when the root system is consistent)."""
        problems = []
        if len(self.roots) != expected_root_count(self.type_label, self.rank):
            problems.append("root count {got} != {expected}".format(got=len(self.roots),
                                                                     expected=expected_root_count(self.type_label,
                                                                                                  self.rank)))
        if len(set(self.roots)) != len(self.roots):
            problems.append("duplicate roots")
        for root in self.roots:
            if tuple(-c for c in root) not in self._index:
                problems.append("negative of {root} missing".format(root=root))
            if tuple(2 * c for c in root) in self._index:
                problems.append("2 * {root} is a root".format(root=root))
        for root in self.positive_roots:
            if any(c > h for c, h in zip(root, self.highest_root)):
                problems.append("{root} not dominated by the highest root".format(root=root))
        if self.dynkin_marks != {i + 1: c for i, c in enumerate(self.highest_root)}:
            problems.append("Dynkin marks differ from the highest root coordinates")
        return problems


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """
    Builds (and caches) the root system of the given type.
    :raises InvalidRootSystemException: type unknown or rank outside its valid range.
    """
    type_label = type_label.upper()
    if type_label not in MIN_RANK or rank < MIN_RANK[type_label] or rank > MAX_RANK.get(type_label, rank):
        raise InvalidRootSystemException(type_label, rank)
    return RootSystem(type_label, rank)


def fundamental_weight_decomposition(rs: RootSystem, root: RootCoords) -> Dict[int, int]:
    """Nonzero coefficients of `root` in the fundamental weights, i.e. <root, alpha_i^vee>."""
    coefficients = {i: rs.coroot_pairing(root, i) for i in range(1, rs.rank + 1)}
    return {i: c for i, c in coefficients.items() if c}


def highest_root_in_weights(rs: RootSystem) -> Dict[int, int]:
    return dict(rs.fundamental_weight_decomp_of_highest_root)


def contact_grading_node_set(rs: RootSystem) -> FrozenSet[int]:
    """Simple roots whose fundamental weights occur in the highest root."""
    return frozenset(highest_root_in_weights(rs))


def depth_one_node_set(rs: RootSystem) -> FrozenSet[int]:
    """Simple roots of Dynkin mark 1."""
    return frozenset(i for i, mark in rs.dynkin_marks.items() if mark == 1)


def simple_types(max_rank: int) -> Iterator[Tuple[str, int]]:
    """(type, rank) of every complex simple type up to the given rank, A1 first."""
    for type_label in "ABCDEFG":
        for rank in range(MIN_RANK[type_label], min(max_rank, MAX_RANK.get(type_label, max_rank)) + 1):
            yield type_label, rank

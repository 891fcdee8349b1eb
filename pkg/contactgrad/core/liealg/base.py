"""Lie algebras given by exact structure constants, and the subspace computations built on them."""
import logging
import random
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ...__types__ import Covector, SparseRows, SparseVector, StructureTable
from ...exceptions import DimensionMismatchException
from ..linalg import Subspace, add, check_dimension, clean, combine, dot, nullspace, ZERO

LOGGER = logging.getLogger(__name__)

__all__ = ["FieldFlag", "Provenance", "LieAlgebra", "bracket", "killing", "ad_matrix", "centralizer",
           "centralizer_of_vectors", "brackets_of", "center", "normalizer_of_line", "kernel_of_form",
           "killing_orthogonal", "JacobiReport", "jacobi_check"]


class FieldFlag(Enum):
    COMPLEX = "complex"  # Complex algebra, rational structure constants in a complex basis
    REAL = "real"  # Real algebra

    @property
    def is_real(self):
        return self == FieldFlag.REAL


class Provenance:
    """Construction record of a Lie algebra."""
    CHEVALLEY = "chevalley"
    SPLIT = "normal real form"
    CLASSICAL = "classical real form"
    REALIFICATION = "realification"
    DIRECT_SUM = "direct sum"

    def __init__(self, kind: str, name: str, params: Optional[Dict[str, Any]] = None,
                 parts: Sequence['Provenance'] = ()):
        self.kind = kind
        self.name = name
        self.params = dict(params or {})
        self.parts = tuple(parts)

    def __repr__(self):
        return "Provenance({kind}: {name})".format(kind=self.kind, name=self.name)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "name": self.name, "params": dict(self.params),
                "parts": [part.to_dict() for part in self.parts]}


class LieAlgebra:
    """
    Finite-dimensional Lie algebra over Q (or a real/complex form of one) in a fixed basis.
    Structure constants are stored only for i < j; antisymmetry is implicit.
    """

    def __init__(self, basis_labels: Sequence[str], structure: StructureTable, field_flag: FieldFlag,
                 provenance: Provenance, cartan_indices: Sequence[int] = (), root_system=None,
                 basis_roots: Optional[Dict[int, Tuple[int, ...]]] = None):
        """
        :param basis_labels: One label per basis vector
        :param structure: (i, j) -> [b_i, b_j] for i < j, zero brackets omitted
        :param field_flag: FieldFlag of the algebra
        :param provenance: How the algebra was built
        :param cartan_indices: Basis indices spanning a Cartan subalgebra, when known
        :param root_system: RootSystem of a Chevalley basis, if any
        :param basis_roots: Basis index -> root for root vectors of a Chevalley basis
        """
        self.basis_labels = list(basis_labels)
        self.structure = {key: dict(value) for key, value in structure.items() if value}  # type: StructureTable
        self.field_flag = field_flag
        self.provenance = provenance
        self.cartan_indices = list(cartan_indices)
        self.root_system = root_system
        self.basis_roots = dict(basis_roots or {})
        self._root_to_index = {root: i for i, root in self.basis_roots.items()}
        self._label_to_index = {label: i for i, label in enumerate(self.basis_labels)}
        self._gram = None  # type: Optional[SparseRows]

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @property
    def name(self) -> str:
        return self.provenance.name

    def __repr__(self):
        return "LieAlgebra({name}, dim={dim}, {field})".format(name=self.name, dim=self.dim,
                                                              field=self.field_flag.value)

    def index_of_label(self, label: str) -> int:
        return self._label_to_index[label]

    def index_of_root(self, root: Tuple[int, ...]) -> int:
        return self._root_to_index[tuple(root)]

    def basis_vector(self, index: int) -> SparseVector:
        return {index: Fraction(1)}

    def vector(self, by_label: Dict[str, Any]) -> SparseVector:
        """Builds a vector from a label -> coefficient dict."""
        return clean({self.index_of_label(label): Fraction(value) for label, value in by_label.items()})

    def describe(self, vector: SparseVector) -> str:
        if not vector:
            return "0"
        return " + ".join("{c}*{label}".format(c=c, label=self.basis_labels[i]) for i, c in sorted(vector.items()))

    def subspace(self, vectors: Iterable[SparseVector] = ()) -> Subspace:
        return Subspace(self.dim, vectors)

    def bracket_basis(self, i: int, j: int) -> SparseVector:
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def bracket(self, x: SparseVector, y: SparseVector) -> SparseVector:
        result = {}  # type: Dict[int, Fraction]
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    result[k] = result.get(k, ZERO) + a * b * c
        return clean(result)

    def ad_matrix(self, x: SparseVector) -> SparseRows:
        """Rows of ad_x: entry [k][i] is the b_k-coefficient of [x, b_i]."""
        rows = {}  # type: SparseRows
        for j, a in x.items():
            for i in range(self.dim):
                if i == j:
                    continue
                for k, c in self.bracket_basis(j, i).items():
                    row = rows.setdefault(k, {})
                    row[i] = row.get(i, ZERO) + a * c
        return {k: clean(row) for k, row in rows.items() if clean(row)}

    def _ad_entries(self) -> List[List[Tuple[int, int, Fraction]]]:
        entries = [[] for _ in range(self.dim)]  # type: List[List[Tuple[int, int, Fraction]]]
        for (a, b), value in self.structure.items():
            for k, c in value.items():
                entries[a].append((k, b, c))
                entries[b].append((k, a, -c))
        return entries

    def killing_gram(self) -> SparseRows:
        """Gram matrix of the trace form B(x, y) = tr(ad_x ad_y), computed once."""
        if self._gram is None:
            entries = self._ad_entries()
            by_position = {}  # type: Dict[Tuple[int, int], List[Tuple[int, Fraction]]]
            for j, items in enumerate(entries):
                for k, m, c in items:
                    by_position.setdefault((k, m), []).append((j, c))
            gram = {}  # type: SparseRows
            for i, items in enumerate(entries):
                row = {}  # type: Dict[int, Fraction]
                for k, m, c in items:
                    for j, d in by_position.get((m, k), ()):
                        row[j] = row.get(j, ZERO) + c * d
                gram[i] = clean(row)
            self._gram = gram
            LOGGER.debug("Computed Killing form of %s", self.name)
        return self._gram

    def killing_covector(self, x: SparseVector) -> Covector:
        """The covector y -> B(x, y)."""
        gram = self.killing_gram()
        return combine((c, gram[i]) for i, c in x.items())

    def killing(self, x: SparseVector, y: SparseVector) -> Fraction:
        return dot(self.killing_covector(x), y)

    def is_nilpotent(self, x: SparseVector) -> bool:
        """Whether ad_x is nilpotent, by iterating images of the whole algebra."""
        current = Subspace(self.dim, [self.bracket(x, {i: Fraction(1)}) for i in range(self.dim)])
        while current.dim:
            image = Subspace(self.dim, [self.bracket(x, row) for row in current.rows])
            if image.dim == current.dim:
                return False
            current = image
        return True

    def root_of(self, index: int) -> Optional[Tuple[int, ...]]:
        return self.basis_roots.get(index)

    def jacobi_residual(self, i: int, j: int, k: int) -> SparseVector:
        x, y, z = ({i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)})
        total = self.bracket(self.bracket_basis(i, j), z)
        total = add(total, self.bracket(self.bracket_basis(j, k), x))
        return add(total, self.bracket(self.bracket_basis(k, i), y))

    def jacobi_violations(self, triples: Iterable[Tuple[int, int, int]]) -> List[Tuple[int, int, int]]:
        return [(i, j, k) for i, j, k in triples if self.jacobi_residual(i, j, k)]

    def derived_algebra(self, S: Subspace) -> Subspace:
        """[S, S]."""
        return self.subspace(self.bracket(x, y) for a, x in enumerate(S.rows) for y in S.rows[a + 1:])

    def center(self, S: Subspace) -> Subspace:
        return center(self, S)

    def is_subalgebra(self, S: Subspace) -> bool:
        return all(S.contains(self.bracket(x, y)) for a, x in enumerate(S.rows) for y in S.rows[a + 1:])


def _check(L: LieAlgebra, *vectors: SparseVector):
    for vector in vectors:
        check_dimension(vector, L.dim)


def bracket(L: LieAlgebra, x: SparseVector, y: SparseVector) -> SparseVector:
    _check(L, x, y)
    return L.bracket(x, y)


def killing(L: LieAlgebra, x: SparseVector, y: SparseVector) -> Fraction:
    _check(L, x, y)
    return L.killing(x, y)


def ad_matrix(L: LieAlgebra, x: SparseVector) -> SparseRows:
    _check(L, x)
    return L.ad_matrix(x)


def centralizer(L: LieAlgebra, S: Subspace) -> Subspace:
    """Null space of the stacked maps x -> [x, s_i]."""
    if S.ambient_dim != L.dim:
        raise DimensionMismatchException(L.dim, S.ambient_dim)
    rows = []  # type: List[SparseVector]
    for s in S.rows:
        rows.extend(L.ad_matrix(s).values())
    return L.subspace(nullspace(rows, L.dim)[0])


def centralizer_of_vectors(L: LieAlgebra, *vectors: SparseVector) -> Subspace:
    rows = []  # type: List[SparseVector]
    for vector in vectors:
        rows.extend(L.ad_matrix(vector).values())
    return L.subspace(nullspace(rows, L.dim)[0])


def normalizer_of_line(L: LieAlgebra, e: SparseVector) -> Subspace:
    """{x : [x, e] in Re}, solved with an extra unknown t for [x, e] = t e."""
    _check(L, e)
    extra = L.dim
    rows = {}  # type: SparseRows
    for k, row in L.ad_matrix(e).items():
        # [x, e] = -ad_e(x)
        rows[k] = {i: -c for i, c in row.items()}
    for k, c in e.items():
        rows.setdefault(k, {})[extra] = -c
    solutions, _ = nullspace([row for row in rows.values() if row], L.dim + 1)
    return L.subspace([{i: c for i, c in solution.items() if i != extra} for solution in solutions])


def kernel_of_form(L: LieAlgebra, theta: Covector, within: Optional[Subspace] = None) -> Subspace:
    """{x : theta(x) = 0}, optionally intersected with `within`."""
    if within is not None:
        return within.solve_within([theta])
    return L.subspace(nullspace([theta], L.dim)[0])


def killing_orthogonal(L: LieAlgebra, S: Subspace, within: Optional[Subspace] = None) -> Subspace:
    """B-orthogonal complement of S (inside `within` when given)."""
    covectors = [L.killing_covector(row) for row in S.rows]
    if within is not None:
        return within.solve_within(covectors)
    return L.subspace(nullspace(covectors, L.dim)[0])


def brackets_of(L: LieAlgebra, left: Subspace, right: Subspace) -> Subspace:
    """Span of [x, y] over basis vectors of the two subspaces."""
    return L.subspace(L.bracket(x, y) for x in left.rows for y in right.rows)


def center(L: LieAlgebra, S: Subspace) -> Subspace:
    """Center of the subalgebra S."""
    return centralizer(L, S).intersection(S)


class JacobiReport:
    def __init__(self, algebra: str, dim: int, triples: int, exhaustive: bool, violations: List[Tuple[int, int, int]]):
        self.algebra = algebra
        self.dim = dim
        self.triples = triples
        self.exhaustive = exhaustive
        self.violations = violations

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {"algebra": self.algebra, "dim": self.dim, "triples": self.triples,
                "mode": "exhaustive" if self.exhaustive else "sampled", "violations": len(self.violations)}


def jacobi_check(L: LieAlgebra, exhaustive_max_dim: int, samples: int, seed: int) -> JacobiReport:
    """
    Jacobi identity on basis triples: all triples up to `exhaustive_max_dim`, otherwise `samples` distinct seeded
    random triples (all of them when there are fewer) plus every triple touching the Cartan subalgebra.
    """
    if L.dim <= exhaustive_max_dim:
        triples = combinations(range(L.dim), 3)  # type: Iterable[Tuple[int, int, int]]
        distinct = 0
        exhaustive = True
    else:
        rng = random.Random(seed)
        wanted = min(samples, L.dim * (L.dim - 1) * (L.dim - 2) // 6)
        sampled = set()  # type: Set[Tuple[int, ...]]
        while len(sampled) < wanted:
            sampled.add(tuple(sorted(rng.sample(range(L.dim), 3))))
        distinct = len(sampled)
        for h in L.cartan_indices:
            others = [i for i in range(L.dim) if i != h]
            for j, k in combinations(others, 2):
                sampled.add(tuple(sorted((h, j, k))))
        triples = sorted(sampled)  # type: ignore
        exhaustive = False
    count = 0
    violations = []
    for triple in triples:
        count += 1
        violations.extend(L.jacobi_violations([triple]))
    LOGGER.info("Jacobi check on %s: %d triples (%d distinct random), %d violations", L.name, count, distinct,
                len(violations))
    return JacobiReport(L.name, L.dim, count, exhaustive, violations)

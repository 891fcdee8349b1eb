"""Exact sparse linear algebra over the rationals.

Vectors are sparse dicts ``index -> Fraction`` with no stored zeros. Echelon forms and null spaces are
computed with sympy's ``DomainMatrix`` over ``QQ``; results are converted back to ``Fraction`` so that the rest
of the package never depends on the ground-type sympy picked (gmpy or pure Python).
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..__types__ import SparseVector
from ..exceptions import DimensionMismatchException

LOGGER = logging.getLogger(__name__)

# Do not expose anything by default (internal module)
__all__ = []  # type: List[str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def clean(vector: SparseVector) -> SparseVector:
    return {i: c for i, c in vector.items() if c}


def add(left: SparseVector, right: SparseVector, scale: Fraction = ONE) -> SparseVector:
    """Returns ``left + scale * right``."""
    result = dict(left)
    for i, c in right.items():
        value = result.get(i, ZERO) + scale * c
        if value:
            result[i] = value
        else:
            result.pop(i, None)
    return result


def scale(vector: SparseVector, factor) -> SparseVector:
    factor = Fraction(factor)
    if not factor:
        return {}
    return {i: factor * c for i, c in vector.items()}


def combine(terms: Iterable[Tuple[Fraction, SparseVector]]) -> SparseVector:
    """Linear combination ``sum(c * v)`` of (coefficient, vector) pairs."""
    result = {}  # type: Dict[int, Fraction]
    for coefficient, vector in terms:
        if not coefficient:
            continue
        for i, c in vector.items():
            result[i] = result.get(i, ZERO) + coefficient * c
    return clean(result)


def dot(left: SparseVector, right: SparseVector) -> Fraction:
    if len(left) > len(right):
        left, right = right, left
    return sum((c * right[i] for i, c in left.items() if i in right), ZERO)


def check_dimension(vector: SparseVector, dim: int):
    for i in vector:
        if not 0 <= i < dim:
            raise DimensionMismatchException(dim, i)


def domain_matrix(rows: Sequence[SparseVector], ncols: int) -> DomainMatrix:
    dod = {}
    for i, row in enumerate(rows):
        entries = {j: to_qq(c) for j, c in row.items() if c}
        if entries:
            dod[i] = entries
    return DomainMatrix(dod, (len(rows), ncols), QQ)


def rref(rows: Iterable[SparseVector], ncols: int) -> Tuple[List[SparseVector], List[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    nonzero = [row for row in rows if row]
    if not nonzero:
        return [], []
    reduced, pivots = domain_matrix(nonzero, ncols).rref()
    sparse = reduced.to_sparse().rep
    result = []
    for i in range(len(pivots)):
        result.append({j: from_qq(value) for j, value in sparse.get(i, {}).items() if value})
    return result, list(pivots)


def rank(rows: Iterable[SparseVector], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Iterable[SparseVector], ncols: int) -> Tuple[List[SparseVector], List[int]]:
    """
    Null space of the matrix with the given rows.
    :return: basis and the free columns; basis vector k is 1 at free column k and 0 at the other free columns,
        so the free-column entries of any solution are its coordinates in this basis.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    by_column = {}  # type: Dict[int, List[Tuple[int, Fraction]]]
    for row, pivot in zip(reduced, pivots):
        for col, value in row.items():
            if col != pivot:
                by_column.setdefault(col, []).append((pivot, value))
    basis = []
    for col in free:
        vector = {col: ONE}
        for pivot, value in by_column.get(col, []):
            vector[pivot] = -value
        basis.append(vector)
    return basis, free


def determinant(rows: Sequence[SparseVector], size: int) -> Fraction:
    if size == 0:
        return ONE
    return from_qq(domain_matrix(rows, size).to_dense().det())


class Subspace:
    """
    Subspace of Q^n stored by its reduced echelon basis.
    Two subspaces are equal exactly when their echelon bases are equal.
    """
    def __init__(self, ambient_dim: int, vectors: Iterable[SparseVector] = ()):
        self.ambient_dim = ambient_dim
        self.rows, self.pivots = rref(vectors, ambient_dim)
        self._pivot_rows = list(zip(self.pivots, self.rows))

    @classmethod
    def zero(cls, ambient_dim: int):
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int):
        return cls(ambient_dim, [{i: ONE} for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> List[SparseVector]:
        return [dict(row) for row in self.rows]

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.pivots == other.pivots and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.pivots)))

    def __repr__(self):
        return "Subspace(dim={dim}, ambient={ambient})".format(dim=self.dim, ambient=self.ambient_dim)

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Remainder of `vector` after eliminating the pivot columns; zero iff the vector lies in the subspace."""
        remainder = dict(vector)
        for pivot, row in self._pivot_rows:
            coefficient = remainder.get(pivot)
            if coefficient:
                remainder = add(remainder, row, -coefficient)
        return remainder

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)

    def contains_subspace(self, other: 'Subspace') -> bool:
        return all(self.contains(row) for row in other.rows)

    def coordinates(self, vector: SparseVector) -> List[Fraction]:
        """Coordinates of a member in the echelon basis (its pivot entries)."""
        return [vector.get(pivot, ZERO) for pivot in self.pivots]

    def __add__(self, other: 'Subspace') -> 'Subspace':
        return Subspace(self.ambient_dim, self.rows + other.rows)

    def is_direct_sum_with(self, other: 'Subspace') -> bool:
        return (self + other).dim == self.dim + other.dim

    def annihilator(self) -> List[SparseVector]:
        """Covectors vanishing on the subspace, under the standard pairing."""
        return nullspace(self.rows, self.ambient_dim)[0]

    def intersection(self, other: 'Subspace') -> 'Subspace':
        if not self.rows or not other.rows:
            return Subspace.zero(self.ambient_dim)
        constraints = [{i: dot(covector, row) for i, row in enumerate(self.rows)} for covector in other.annihilator()]
        solutions, _ = nullspace([clean(c) for c in constraints], self.dim)
        return Subspace(self.ambient_dim, [combine((c, self.rows[i]) for i, c in solution.items())
                                           for solution in solutions])

    def solve_within(self, constraints: Iterable[SparseVector]) -> 'Subspace':
        """Members of the subspace annihilated by every given covector."""
        rows = [clean({i: dot(covector, row) for i, row in enumerate(self.rows)}) for covector in constraints]
        solutions, _ = nullspace(rows, self.dim)
        return Subspace(self.ambient_dim, [combine((c, self.rows[i]) for i, c in solution.items())
                                           for solution in solutions])


def span(ambient_dim: int, vectors: Iterable[SparseVector]) -> Subspace:
    return Subspace(ambient_dim, vectors)

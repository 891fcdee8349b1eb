"""
sl2-triples, the gradations they induce and the canonical decomposition g = (Rh + Re + z + V) + (Rf + W).

The criteria below decide whether a triple gives a contact gradation, whether its normalizer is a symmetric
subalgebra and whether the triple is short.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..__types__ import Partition, RootCoords, SparseVector
from ..exceptions import (InvalidPartitionException, MixedParityPartitionException, NonIntegralEigenvalueException,
                          NotARootException, TripleRelationException)
from .linalg import Subspace, add, determinant, nullspace, rank, scale
from .liealg import (LieAlgebra, centralizer, centralizer_of_vectors, classical_form, contact_triple,
                     killing_orthogonal, normalizer_of_line, split_real_form)
from .liealg.classical import ComplexMatrix, MatrixLieAlgebra, block_matrices
from .rootsys import simple_types

LOGGER = logging.getLogger(__name__)

__all__ = ["Sl2Triple", "Gradation", "CanonicalDecomposition", "verify_triple", "regular_sl2", "ad_h_gradation",
           "canonical_decomposition", "is_contact_gradation", "is_symmetric_type", "is_short", "is_even",
           "vinberg_short_check", "contact_form_kernel", "block_triple", "regular_triple_corpus", "contact_sl2",
           "triple_from_matrices"]

SHORT_EIGENVALUES = frozenset((0, 2, -2, 4, -4))


class Sl2Triple:
    """(h, e, f) with [h,e] = 2e, [h,f] = -2f and [e,f] = h; build through verify_triple."""

    def __init__(self, ambient: LieAlgebra, h: SparseVector, e: SparseVector, f: SparseVector, label: str = ""):
        self.ambient = ambient
        self.h = h
        self.e = e
        self.f = f
        self.label = label

    def span(self) -> Subspace:
        return self.ambient.subspace([self.h, self.e, self.f])

    def __repr__(self):
        return "Sl2Triple({label} in {algebra})".format(label=self.label or "?", algebra=self.ambient.name)


def verify_triple(L: LieAlgebra, h: SparseVector, e: SparseVector, f: SparseVector, label: str = "") -> Sl2Triple:
    """
    :raises TripleRelationException: the first failing relation, with its residual
    """
    relations = (("[h,e] = 2e", L.bracket(h, e), scale(e, 2)),
                 ("[h,f] = -2f", L.bracket(h, f), scale(f, -2)),
                 ("[e,f] = h", L.bracket(e, f), h))
    for relation, left, right in relations:
        residual = add(left, right, Fraction(-1))
        if residual:
            raise TripleRelationException(relation, L.describe(residual))
    if not e:
        raise TripleRelationException("e != 0", "0")
    return Sl2Triple(L, h, e, f, label)


def regular_sl2(L: LieAlgebra, mu: RootCoords) -> Sl2Triple:
    """
    (h_mu, e_mu, e_-mu) in a Chevalley basis or a normal real form.
    :raises NotARootException: mu is not a root of the underlying root system
    """
    rs = L.root_system
    mu = tuple(mu)
    if rs is None or not rs.is_root(mu):
        raise NotARootException(mu)
    e = L.basis_vector(L.index_of_root(mu))
    f = L.basis_vector(L.index_of_root(tuple(-c for c in mu)))
    return verify_triple(L, L.bracket(e, f), e, f, "s({mu})".format(mu=",".join(str(c) for c in mu)))


def triple_from_matrices(L: MatrixLieAlgebra, matrices: Sequence[ComplexMatrix], label: str = "") -> Sl2Triple:
    h, e, f = (L.element(matrix) for matrix in matrices)
    return verify_triple(L, h, e, f, label)


def contact_sl2(L: LieAlgebra) -> Sl2Triple:
    """The triple of the contact gradation: highest root for Chevalley bases, canonical matrices otherwise."""
    if L.root_system is not None:
        return regular_sl2(L, L.root_system.highest_root)
    h, e, f = contact_triple(L)
    return verify_triple(L, h, e, f, "contact")


class Gradation:
    """Eigenspace decomposition g = sum of g^i under ad_h."""

    def __init__(self, ambient: LieAlgebra, pieces: Dict[int, Subspace]):
        self.ambient = ambient
        self.pieces = {i: piece for i, piece in sorted(pieces.items()) if piece.dim}

    def piece(self, i: int) -> Subspace:
        return self.pieces.get(i, Subspace.zero(self.ambient.dim))

    @property
    def depth(self) -> int:
        return max(self.pieces)

    @property
    def eigenvalues(self) -> Dict[int, int]:
        return {i: piece.dim for i, piece in self.pieces.items()}

    @property
    def is_odd(self) -> bool:
        return any(i % 2 for i in self.pieces)

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    def restricted_eigenvalues(self, subspace: Subspace) -> Dict[int, int]:
        """Multiplicities of the ad_h-eigenvalues on an ad_h-invariant subspace."""
        result = {}
        for i, piece in self.pieces.items():
            dim = piece.intersection(subspace).dim
            if dim:
                result[i] = dim
        return result

    def check_compatibility(self) -> List[Tuple[int, int]]:
        """Pairs (i, j) with [g^i, g^j] not inside g^{i+j}."""
        problems = []
        for i, left in self.pieces.items():
            for j, right in self.pieces.items():
                if j < i:
                    continue
                target = self.piece(i + j)
                if any(not target.contains(self.ambient.bracket(x, y)) for x in left.rows for y in right.rows):
                    problems.append((i, j))
        return problems

    def to_dict(self) -> Dict[str, Any]:
        return {"depth": self.depth, "parity": self.parity,
                "eigenvalues": {str(i): dim for i, dim in self.eigenvalues.items()}}


def ad_h_gradation(L: LieAlgebra, triple: Sl2Triple) -> Gradation:
    """
    Integer eigenspaces of ad_h, scanned 0, 1, -1, 2, -2, ... until their dimensions fill the algebra.
    :raises NonIntegralEigenvalueException: the scan ends short of dim L
    """
    ad_h = L.ad_matrix(triple.h)
    pieces = {}
    found = 0
    for step in range(2 * L.dim + 1):
        i = (step + 1) // 2 if step % 2 else -(step // 2)
        rows = []
        for k in range(L.dim):
            row = dict(ad_h.get(k, {}))
            row[k] = row.get(k, Fraction(0)) - i
            rows.append({col: c for col, c in row.items() if c})
        basis, _ = nullspace(rows, L.dim)
        if basis:
            pieces[i] = L.subspace(basis)
            found += len(basis)
        if found == L.dim:
            break
    if found != L.dim:
        raise NonIntegralEigenvalueException(found, L.dim)
    gradation = Gradation(L, pieces)
    LOGGER.debug("Gradation of %s by %s: %s", L.name, triple.label, gradation.eigenvalues)
    return gradation


class CanonicalDecomposition:
    """g = h_alg + m with h_alg = Rh + Re + z + V, m = Rf + W and k_alg = Re + z + V."""

    def __init__(self, triple: Sl2Triple, z: Subspace, q: Subspace, V: Subspace, W: Subspace):
        L = triple.ambient
        self.triple = triple
        self.z = z
        self.q = q
        self.V = V
        self.W = W
        self.h_alg = L.subspace([triple.h, triple.e] + z.rows + V.rows)
        self.m = L.subspace([triple.f] + W.rows)
        self.k_alg = L.subspace([triple.e] + z.rows + V.rows)

    @property
    def dims(self) -> Dict[str, int]:
        return {"z": self.z.dim, "V": self.V.dim, "W": self.W.dim, "h": self.h_alg.dim, "m": self.m.dim,
                "k": self.k_alg.dim}

    def check(self) -> List[str]:
        """Violated identities of the decomposition (empty when all hold)."""
        L = self.triple.ambient
        problems = []
        if self.k_alg != centralizer_of_vectors(L, self.triple.e):
            problems.append("k != Z(e)")
        if self.h_alg != normalizer_of_line(L, self.triple.e):
            problems.append("h != N(Re)")
        if not self.h_alg.is_direct_sum_with(self.m) or self.h_alg.dim + self.m.dim != L.dim:
            problems.append("h + m is not a direct sum decomposition of g")
        if self.z.dim + self.V.dim + self.W.dim + 3 != L.dim:
            problems.append("dim z + dim V + dim W + 3 != dim g")
        return problems


def canonical_decomposition(L: LieAlgebra, triple: Sl2Triple) -> CanonicalDecomposition:
    s = triple.span()
    z = centralizer(L, s)
    q = killing_orthogonal(L, s + z)
    V = q.solve_within(L.ad_matrix(triple.e).values())
    W = Subspace.zero(L.dim)
    current = V
    for _ in range(L.dim):
        current = L.subspace(L.bracket(triple.f, x) for x in current.rows)
        if not current.dim:
            break
        extended = W + current
        if extended.dim == W.dim:
            break
        W = extended
    decomposition = CanonicalDecomposition(triple, z, q, V, W)
    LOGGER.debug("Canonical decomposition of %s for %s: %s", L.name, triple.label, decomposition.dims)
    return decomposition


class Certificate:
    """Outcome of a criterion with the data it was decided on; truthy iff the criterion holds."""

    def __init__(self, holds: bool, **details):
        self.holds = holds
        self.details = details

    def __bool__(self):
        return self.holds

    def __getattr__(self, item):
        try:
            return self.__dict__['details'][item]
        except KeyError:
            raise AttributeError(item)

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.details, holds=self.holds)


def is_contact_gradation(grad: Gradation, L: Optional[LieAlgebra] = None) -> Certificate:
    """
    Depth 2, dim g^{+-2} = 1 and a nondegenerate pairing g^{-1} x g^{-1} -> g^{-2}. The A1 case (g^{-1} = 0) is
    reported as an edge case and does not pass.
    """
    L = L or grad.ambient
    top, bottom, odd = grad.piece(2), grad.piece(-2), grad.piece(-1)
    if grad.depth != 2 or top.dim != 1 or bottom.dim != 1:
        return Certificate(False, depth=grad.depth, top_dim=top.dim, bottom_dim=bottom.dim, a1_edge_case=False,
                           reason="depth or top dimension")
    if not odd.dim:
        return Certificate(False, depth=2, top_dim=1, bottom_dim=1, a1_edge_case=L.dim == 3, rank=0, odd_dim=0,
                           reason="g^-1 = 0")
    pivot = bottom.pivots[0]
    pairing = []
    for x in odd.rows:
        pairing.append({j: c for j, c in ((j, L.bracket(x, y).get(pivot, Fraction(0))) for j, y in enumerate(odd.rows))
                        if c})
    pairing_rank = rank(pairing, odd.dim)
    det = determinant(pairing, odd.dim)
    return Certificate(bool(det), depth=2, top_dim=1, bottom_dim=1, a1_edge_case=False, rank=pairing_rank,
                       odd_dim=odd.dim, determinant=str(det), reason="" if det else "degenerate pairing")


def is_symmetric_type(L: LieAlgebra, triple: Sl2Triple,
                      decomposition: Optional[CanonicalDecomposition] = None) -> Certificate:
    """n = s + z and q = V + W: g = n + q directly, [n, q] in q and [q, q] in n."""
    decomposition = decomposition or canonical_decomposition(L, triple)
    n = triple.span() + decomposition.z
    q = decomposition.V + decomposition.W
    dims = {"n": n.dim, "q": q.dim}
    if not n.is_direct_sum_with(q) or n.dim + q.dim != L.dim:
        return Certificate(False, violation="g != n + q", **dims)
    for x in n.rows:
        for y in q.rows:
            if not q.contains(L.bracket(x, y)):
                return Certificate(False, violation="[n,q] not in q", pair=(L.describe(x), L.describe(y)), **dims)
    for a, x in enumerate(q.rows):
        for y in q.rows[a + 1:]:
            if not n.contains(L.bracket(x, y)):
                return Certificate(False, violation="[q,q] not in n", pair=(L.describe(x), L.describe(y)), **dims)
    return Certificate(True, violation=None, **dims)


def is_short(triple: Sl2Triple, grad: Optional[Gradation] = None) -> bool:
    """All ad_h-eigenvalues lie in {0, +-2, +-4}."""
    grad = grad or ad_h_gradation(triple.ambient, triple)
    return set(grad.pieces) <= SHORT_EIGENVALUES


def is_even(grad: Gradation) -> bool:
    return not grad.is_odd


def _family(type_label: str) -> str:
    family = {'A': 'sl', 'B': 'so', 'D': 'so', 'C': 'sp'}.get(type_label.upper(), type_label.lower())
    if family not in ('sl', 'so', 'sp'):
        raise InvalidPartitionException("type {label}".format(label=type_label))
    return family


def vinberg_short_check(type_label: str, partition: Partition, strict: bool = False) -> bool:
    """
    Shortness of the sl2 given by a partition of the defining representation: all parts at most 3, with an even
    number of parts 2 for so and an even number of parts 3 for sp. Mixed parity gives odd eigenvalues, hence False,
    unless strict is set.
    :raises InvalidPartitionException: non-positive part or unknown family
    :raises MixedParityPartitionException: strict and parts of both parities
    """
    family = _family(type_label)
    if not partition or any(part <= 0 for part in partition):
        raise InvalidPartitionException(partition)
    if len({part % 2 for part in partition}) > 1:
        if strict:
            raise MixedParityPartitionException(partition)
        return False
    if max(partition) > 3:
        return False
    if family == 'so':
        return partition.count(2) % 2 == 0
    if family == 'sp':
        return partition.count(3) % 2 == 0
    return True


def contact_form_kernel(L: LieAlgebra, triple: Sl2Triple) -> Certificate:
    """
    Rank certificate for ker d(theta) = Z(e), with d(theta)(x, y) = -B(e, [x, y]) / B(e, f).
    """
    covector = L.killing_covector(triple.e)
    norm = L.killing(triple.e, triple.f)
    rows = {i: {} for i in range(L.dim)}  # type: Dict[int, Dict[int, Fraction]]
    for (i, j), vector in L.structure.items():
        value = sum((covector.get(k, Fraction(0)) * c for k, c in vector.items()), Fraction(0))
        if value:
            rows[i][j] = -value / norm
            rows[j][i] = value / norm
    kernel = L.subspace(nullspace(list(rows.values()), L.dim)[0])
    centralizer_e = centralizer_of_vectors(L, triple.e)
    return Certificate(kernel == centralizer_e, rank=L.dim - kernel.dim, kernel_dim=kernel.dim,
                       centralizer_dim=centralizer_e.dim, normalization=str(norm))


def block_triple(n: int, partition: Partition, algebra: Optional[MatrixLieAlgebra] = None) -> Sl2Triple:
    """
    sl2-triple of sl(n,R) acting irreducibly on blocks of the given sizes.
    :raises InvalidPartitionException: parts not positive or not summing to n
    """
    if any(part <= 0 for part in partition) or sum(partition) != n:
        raise InvalidPartitionException(partition)
    algebra = algebra or classical_form('sl_R', n=n)
    label = "({parts})".format(parts=",".join(str(part) for part in partition))
    return triple_from_matrices(algebra, block_matrices(partition), label)


def regular_triple_corpus(max_rank: int) -> Iterator[Tuple[LieAlgebra, Sl2Triple]]:
    """Regular triples s(mu) of every positive root mu in every normal real form up to the given rank."""
    for type_label, rank_ in simple_types(max_rank):
        L = split_real_form(type_label, rank_)
        for mu in L.root_system.positive_roots:
            yield L, regular_sl2(L, mu)

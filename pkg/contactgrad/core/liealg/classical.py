"""
Classical real forms as explicit matrix algebras.

Each form is the real solution space of linear constraints on an N x N matrix X = A + iB. The unknowns are the
entries X[i,j] (real-entry forms) or Re[i,j] and Im[i,j] (complex-entry forms). The basis is indexed by the free
unknowns of the constraint system, so the coordinates of a member are read off its free entries.
"""
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy import I, QQ, Expr, Matrix, Rational
from sympy.polys.matrices import DomainMatrix

from ...__types__ import SparseVector, StructureTable
from ...exceptions import InvalidRealFormException, NotInAlgebraException, UnknownRealFormException
from ..datasets import parse
from ..linalg import from_qq, nullspace, to_qq
from .base import FieldFlag, LieAlgebra, Provenance

LOGGER = logging.getLogger(__name__)

__all__ = ["ComplexMatrix", "MatrixLieAlgebra", "classical_form", "unitary_form", "element", "contact_triple",
           "block_matrices", "contact_matrices", "vector_matrices", "FAMILIES"]

Entry = Tuple[Fraction, Fraction]


def to_complex_pair(value: Any) -> Entry:
    """
    (re, im) of an int, Fraction, (re, im) pair or expression such as '1/2 - I'.
    :raises ValueError: an expression that is not a Gaussian rational
    """
    if isinstance(value, (int, Fraction)):
        return Fraction(value), Fraction(0)
    if isinstance(value, tuple):
        return Fraction(value[0]), Fraction(value[1])
    parsed = parse(value, {"I": I})
    real, imag = parsed.as_real_imag() if isinstance(parsed, Expr) else (None, None)
    if not (getattr(real, 'is_Rational', False) and getattr(imag, 'is_Rational', False)):
        raise ValueError("{value} is not a Gaussian rational".format(value=value))
    return Fraction(str(real)), Fraction(str(imag))


def _qq_matrix(rows: int, cols: int, entries: Dict[Tuple[int, int], Fraction]) -> DomainMatrix:
    dod = {}  # type: Dict[int, Dict[int, Any]]
    for (i, j), value in entries.items():
        if value:
            dod.setdefault(i, {})[j] = to_qq(value)
    return DomainMatrix(dod, (rows, cols), QQ)


def _qq_entries(matrix: DomainMatrix) -> Dict[Tuple[int, int], Fraction]:
    return {(i, j): from_qq(value) for i, row in matrix.to_sparse().rep.items() for j, value in row.items() if value}


class ComplexMatrix:
    """Square matrix with Gaussian-rational entries, held as a pair of QQ matrices (real part, imaginary part)."""

    def __init__(self, re: DomainMatrix, im: Optional[DomainMatrix] = None):
        self.re = re
        self.im = im if im is not None else _qq_matrix(re.shape[0], re.shape[1], {})

    @classmethod
    def from_entries(cls, size: int, entries: Dict[Tuple[int, int], Any]) -> 'ComplexMatrix':
        pairs = {key: to_complex_pair(value) for key, value in entries.items()}
        return cls(_qq_matrix(size, size, {key: pair[0] for key, pair in pairs.items()}),
                   _qq_matrix(size, size, {key: pair[1] for key, pair in pairs.items()}))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> 'ComplexMatrix':
        return cls.from_entries(len(rows), {(i, j): value for i, row in enumerate(rows) for j, value in enumerate(row)})

    @classmethod
    def zero(cls, size: int) -> 'ComplexMatrix':
        return cls.from_entries(size, {})

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> 'ComplexMatrix':
        return cls.from_entries(len(values), {(i, i): value for i, value in enumerate(values)})

    @classmethod
    def unit(cls, size: int, i: int, j: int, value: Any = 1) -> 'ComplexMatrix':
        return cls.from_entries(size, {(i, j): value})

    @classmethod
    def outer(cls, column: Sequence[Any], row: Sequence[Any]) -> 'ComplexMatrix':
        """column * row^T (no conjugation)."""
        left = [to_complex_pair(v) for v in column]
        right = [to_complex_pair(v) for v in row]
        return cls.from_entries(len(left), {(i, j): (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])
                                            for i, a in enumerate(left) for j, b in enumerate(right)})

    @property
    def size(self) -> int:
        return self.re.shape[0]

    def __add__(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
        return ComplexMatrix(self.re + other.re, self.im + other.im)

    def __sub__(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
        return ComplexMatrix(self.re - other.re, self.im - other.im)

    def __neg__(self) -> 'ComplexMatrix':
        return ComplexMatrix(-self.re, -self.im)

    def __matmul__(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
        return ComplexMatrix(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def scale(self, value: Any) -> 'ComplexMatrix':
        a, b = (to_qq(c) for c in to_complex_pair(value))
        return ComplexMatrix(self.re * a - self.im * b, self.im * a + self.re * b)

    def conjugate(self) -> 'ComplexMatrix':
        return ComplexMatrix(self.re, -self.im)

    def transpose(self) -> 'ComplexMatrix':
        return ComplexMatrix(self.re.transpose(), self.im.transpose())

    def adjoint(self) -> 'ComplexMatrix':
        return ComplexMatrix(self.re.transpose(), -self.im.transpose())

    def commutator(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
        return self @ other - other @ self

    def trace(self) -> 'ComplexMatrix':
        re, im = _qq_entries(self.re), _qq_entries(self.im)
        n = self.size
        return ComplexMatrix(_qq_matrix(1, 1, {(0, 0): sum((re.get((i, i), 0) for i in range(n)), Fraction(0))}),
                             _qq_matrix(1, 1, {(0, 0): sum((im.get((i, i), 0) for i in range(n)), Fraction(0))}))

    def entries(self) -> Dict[Tuple[int, int], Entry]:
        re, im = _qq_entries(self.re), _qq_entries(self.im)
        return {key: (re.get(key, Fraction(0)), im.get(key, Fraction(0))) for key in set(re) | set(im)}

    def is_real(self) -> bool:
        return not _qq_entries(self.im)

    def is_zero(self) -> bool:
        return not self.entries()

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.size == other.size and self.entries() == other.entries()

    def __repr__(self):
        return "ComplexMatrix({entries})".format(entries=sorted(self.entries().items()))


def _identity_blocks(*signs: int) -> ComplexMatrix:
    """Diagonal matrix with the given +-1 entries."""
    return ComplexMatrix.diagonal(list(signs))


def _signature(p: int, q: int) -> ComplexMatrix:
    return _identity_blocks(*([1] * p + [-1] * q))


def _block(n: int, upper_right: int, lower_left: int) -> ComplexMatrix:
    """[[0, a I], [b I, 0]] of size 2n."""
    entries = {}  # type: Dict[Tuple[int, int], Any]
    for k in range(n):
        entries[(k, n + k)] = upper_right
        entries[(n + k, k)] = lower_left
    return ComplexMatrix.from_entries(2 * n, entries)


def symplectic_form(n: int) -> ComplexMatrix:
    return _block(n, 1, -1)


def split_symmetric_form(size: int) -> ComplexMatrix:
    """[[0, I], [I, 0]], with a trailing 1 on the diagonal for odd size."""
    m = size // 2
    entries = {}  # type: Dict[Tuple[int, int], Any]
    for k in range(m):
        entries[(k, m + k)] = 1
        entries[(m + k, k)] = 1
    if size % 2:
        entries[(size - 1, size - 1)] = 1
    return ComplexMatrix.from_entries(size, entries)


def _preserves(form: ComplexMatrix) -> Callable[[ComplexMatrix], ComplexMatrix]:
    """X -> X^T G + G X."""
    return lambda x: x.transpose() @ form + form @ x


def _preserves_hermitian(form: ComplexMatrix) -> Callable[[ComplexMatrix], ComplexMatrix]:
    """X -> X* H + H X."""
    return lambda x: x.adjoint() @ form + form @ x


class MatrixFamily:
    """A family of classical forms: matrix size, entry type, defining constraints and expected dimension."""

    def __init__(self, key: str, display: str, size: Callable[..., int], complex_entries: bool,
                 constraints: Callable[..., List[Callable[[ComplexMatrix], ComplexMatrix]]],
                 dim: Callable[..., int], valid: Callable[..., bool], field_flag: FieldFlag = FieldFlag.REAL):
        self.key = key
        self.display = display
        self.size = size
        self.complex_entries = complex_entries
        self.constraints = constraints
        self.dim = dim
        self.valid = valid
        self.field_flag = field_flag


def _traceless(x: ComplexMatrix) -> ComplexMatrix:
    return x.trace()


def _su_constraints(p, q, form=None):
    hermitian = form if form is not None else _signature(p, q)
    return [_preserves_hermitian(hermitian), _traceless]


def _su_star_constraints(n):
    j = _block(n, -1, 1)
    return [lambda x: x @ j - j @ x.conjugate(), _traceless]


def _so_star_constraints(n):
    return [_preserves(split_symmetric_form(2 * n)), _preserves_hermitian(_signature(n, n))]


def _sp_constraints(p, q):
    # K = diag(I_p, -I_q, I_p, -I_q)
    return [_preserves(symplectic_form(p + q)), _preserves_hermitian(_identity_blocks(*([1] * p + [-1] * q) * 2))]


def _so_complex_constraints(n, form='identity'):
    gram = split_symmetric_form(n) if form == 'split' else _identity_blocks(*([1] * n))
    return [_preserves(gram)]


FAMILIES = {
    'sl_R': MatrixFamily('sl_R', "sl({n},R)", lambda n: n, False, lambda n: [_traceless],
                         lambda n: n * n - 1, lambda n: n >= 2),
    'su': MatrixFamily('su', "su({p},{q})", lambda p, q, form=None: p + q, True, _su_constraints,
                       lambda p, q, form=None: (p + q) ** 2 - 1,
                       lambda p, q, form=None: p >= 0 and q >= 0 and p + q >= 2),
    'su_star': MatrixFamily('su_star', "su*({size})", lambda n: 2 * n, True, _su_star_constraints,
                            lambda n: 4 * n * n - 1, lambda n: n >= 1),
    'so': MatrixFamily('so', "so({p},{q})", lambda p, q: p + q, False,
                       lambda p, q: [_preserves(_signature(p, q))],
                       lambda p, q: (p + q) * (p + q - 1) // 2,
                       lambda p, q: p >= 0 and q >= 0 and p + q >= 3),
    'so_star': MatrixFamily('so_star', "so*({size})", lambda n: 2 * n, True, _so_star_constraints,
                            lambda n: n * (2 * n - 1), lambda n: n >= 2),
    'sp_R': MatrixFamily('sp_R', "sp({n},R)", lambda n: 2 * n, False,
                         lambda n: [_preserves(symplectic_form(n))],
                         lambda n: n * (2 * n + 1), lambda n: n >= 1),
    'sp': MatrixFamily('sp', "sp({p},{q})", lambda p, q: 2 * (p + q), True, _sp_constraints,
                       lambda p, q: (p + q) * (2 * (p + q) + 1),
                       lambda p, q: p >= 0 and q >= 0 and p + q >= 1),
    'sl_C': MatrixFamily('sl_C', "sl({n},C)", lambda n: n, False, lambda n: [_traceless],
                         lambda n: n * n - 1, lambda n: n >= 2, FieldFlag.COMPLEX),
    'so_C': MatrixFamily('so_C', "so({n},C)", lambda n, form='identity': n, False, _so_complex_constraints,
                         lambda n, form='identity': n * (n - 1) // 2,
                         lambda n, form='identity': n >= 3 and form in ('identity', 'split'), FieldFlag.COMPLEX),
    'sp_C': MatrixFamily('sp_C', "sp({n},C)", lambda n: 2 * n, False,
                         lambda n: [_preserves(symplectic_form(n))],
                         lambda n: n * (2 * n + 1), lambda n: n >= 1, FieldFlag.COMPLEX),
}


class MatrixLieAlgebra(LieAlgebra):
    """Lie algebra of N x N matrices with its embedding kept, so that matrices and vectors convert both ways."""

    def __init__(self, family: MatrixFamily, params: Dict[str, Any], size: int, basis_matrices: List[ComplexMatrix],
                 free: List[int], labels: List[str], structure: StructureTable, provenance: Provenance):
        super().__init__(labels, structure, family.field_flag, provenance)
        self.family = family
        self.params = params
        self.size = size
        self.basis_matrices = basis_matrices
        self.free = free

    @property
    def complex_entries(self) -> bool:
        return self.family.complex_entries

    def unknowns(self, matrix: ComplexMatrix) -> SparseVector:
        """Flattens a matrix to its unknown coordinates."""
        vector = {}  # type: SparseVector
        n = self.size
        for (i, j), (re, im) in matrix.entries().items():
            if self.complex_entries:
                if re:
                    vector[2 * (i * n + j)] = re
                if im:
                    vector[2 * (i * n + j) + 1] = im
            else:
                if im:
                    raise NotInAlgebraException("non-real matrix in {name}".format(name=self.name))
                vector[i * n + j] = re
        return vector

    def matrix(self, vector: SparseVector) -> ComplexMatrix:
        result = ComplexMatrix.zero(self.size)
        for k, c in vector.items():
            result = result + self.basis_matrices[k].scale(c)
        return result

    def element(self, matrix: ComplexMatrix) -> SparseVector:
        """
        Coordinates of a matrix in the basis.
        :raises NotInAlgebraException: the matrix violates a defining constraint
        """
        unknowns = self.unknowns(matrix)
        coordinates = {k: unknowns[col] for k, col in enumerate(self.free) if col in unknowns}
        if self.matrix(coordinates) != matrix:
            raise NotInAlgebraException("matrix {matrix} in {name}".format(matrix=matrix, name=self.name))
        return coordinates


def _unknown_label(index: int, size: int, complex_entries: bool) -> str:
    if complex_entries:
        entry, part = divmod(index, 2)
        i, j = divmod(entry, size)
        return "{part}[{i},{j}]".format(part="Im" if part else "Re", i=i + 1, j=j + 1)
    i, j = divmod(index, size)
    return "X[{i},{j}]".format(i=i + 1, j=j + 1)


def _unit_unknown(index: int, size: int, complex_entries: bool) -> ComplexMatrix:
    if complex_entries:
        entry, part = divmod(index, 2)
        i, j = divmod(entry, size)
        return ComplexMatrix.unit(size, i, j, (0, 1) if part else 1)
    i, j = divmod(index, size)
    return ComplexMatrix.unit(size, i, j)


def classical_form(key: str, **params) -> MatrixLieAlgebra:
    """
    Builds a classical form, e.g. classical_form('su', p=1, q=2) or classical_form('so_star', n=3).
    :raises UnknownRealFormException: unknown family key
    :raises InvalidRealFormException: parameters out of range, or the solution space has the wrong dimension
    """
    if key not in FAMILIES:
        raise UnknownRealFormException(key)
    family = FAMILIES[key]
    try:
        valid = family.valid(**params)
    except TypeError:
        valid = False
    if not valid:
        raise InvalidRealFormException(key, params)
    size = family.size(**params)
    constraints = family.constraints(**params)
    count = 2 * size * size if family.complex_entries else size * size
    equation_index = {}  # type: Dict[Tuple[int, int, int, int], int]
    rows = {}  # type: Dict[int, SparseVector]
    for u in range(count):
        unit = _unit_unknown(u, size, family.complex_entries)
        for c, constraint in enumerate(constraints):
            for (i, j), pair in constraint(unit).entries().items():
                for part, value in enumerate(pair):
                    if value:
                        eq = equation_index.setdefault((c, i, j, part), len(equation_index))
                        rows.setdefault(eq, {})[u] = value
    solutions, free = nullspace(list(rows.values()), count)
    expected = family.dim(**params)
    if len(solutions) != expected:
        raise InvalidRealFormException(key, dict(params, dim=len(solutions), expected=expected))
    matrices = [_matrix_of_unknowns(solution, size, family.complex_entries) for solution in solutions]
    labels = [_unknown_label(col, size, family.complex_entries) for col in free]
    display_params = dict(params, size=size)
    name = family.display.format(**display_params) if 'form' not in params or params['form'] in (None, 'identity') \
        else "{base}[{form}]".format(base=family.display.format(**display_params),
                                     form=params['form'] if isinstance(params['form'], str) else "H")
    provenance = Provenance(Provenance.CLASSICAL, name, dict(params, family=key))
    algebra = MatrixLieAlgebra(family, dict(params), size, matrices, free, labels, {}, provenance)
    algebra.structure = _structure(algebra)
    LOGGER.info("Built %s (dim %d)", name, algebra.dim)
    return algebra


def _matrix_of_unknowns(solution: SparseVector, size: int, complex_entries: bool) -> ComplexMatrix:
    result = ComplexMatrix.zero(size)
    for u, value in solution.items():
        result = result + _unit_unknown(u, size, complex_entries).scale(value)
    return result


def _structure(algebra: MatrixLieAlgebra) -> StructureTable:
    structure = {}  # type: StructureTable
    for a in range(algebra.dim):
        for b in range(a + 1, algebra.dim):
            commutator = algebra.basis_matrices[a].commutator(algebra.basis_matrices[b])
            if commutator.is_zero():
                continue
            try:
                structure[(a, b)] = algebra.element(commutator)
            except NotInAlgebraException:
                raise NotInAlgebraException("[{x}, {y}] in {name}".format(
                    x=algebra.basis_labels[a], y=algebra.basis_labels[b], name=algebra.name))
    return structure


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def hermitian_signature(form: ComplexMatrix) -> Tuple[int, int]:
    """Numbers of positive and negative eigenvalues of a Hermitian matrix."""
    entries = form.entries()
    n = form.size
    zero = (Fraction(0), Fraction(0))
    matrix = Matrix(n, n, lambda i, j: (_rational(entries.get((i, j), zero)[0])
                                        + I * _rational(entries.get((i, j), zero)[1])))
    positive = negative = 0
    for value, multiplicity in matrix.eigenvals().items():
        if value.is_positive:
            positive += multiplicity
        elif value.is_negative:
            negative += multiplicity
    return positive, negative


def unitary_form(form: Sequence[Sequence[Any]]) -> MatrixLieAlgebra:
    """su(p,q) realized as the traceless matrices preserving the given Hermitian form."""
    hermitian = ComplexMatrix.from_rows(form)
    if hermitian.adjoint() != hermitian:
        raise InvalidRealFormException('su', {'form': 'not Hermitian'})
    p, q = hermitian_signature(hermitian)
    if p + q != hermitian.size:
        raise InvalidRealFormException('su', {'form': 'degenerate'})
    return classical_form('su', p=p, q=q, form=hermitian)


def element(algebra: LieAlgebra, matrix: Any) -> SparseVector:
    """Coordinates of a matrix (ComplexMatrix or nested rows) in a matrix algebra or its realification."""
    if not isinstance(matrix, ComplexMatrix):
        matrix = ComplexMatrix.from_rows(matrix)
    if isinstance(algebra, MatrixLieAlgebra):
        return algebra.element(matrix)
    convert = getattr(algebra, 'element', None)
    if convert is None:
        raise NotInAlgebraException("{name} has no matrix realization".format(name=algebra.name))
    return convert(matrix)


Vector = List[Any]


def _unit_vector(size: int, *entries: Tuple[int, Any]) -> Vector:
    vector = [0] * size  # type: Vector
    for index, value in entries:
        vector[index] = value
    return vector


def wedge(a: Vector, b: Vector, form: ComplexMatrix) -> ComplexMatrix:
    """a b^T G - b a^T G, the rank-two element of so(G) acting by v -> a G(b, v) - b G(a, v)."""
    return ComplexMatrix.outer(a, b) @ form - ComplexMatrix.outer(b, a) @ form


def _hermitian_outer(a: Vector, b: Vector, form: ComplexMatrix) -> ComplexMatrix:
    """a b* H, acting by v -> a H(b, v)."""
    conjugate = [(pair[0], -pair[1]) for pair in (to_complex_pair(v) for v in b)]
    return ComplexMatrix.outer(a, conjugate) @ form


def block_matrices(partition: Sequence[int]) -> Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    """(h, e, f) acting irreducibly on consecutive blocks of the given sizes."""
    size = sum(partition)
    h = {}  # type: Dict[Tuple[int, int], Any]
    e = {}  # type: Dict[Tuple[int, int], Any]
    f = {}  # type: Dict[Tuple[int, int], Any]
    offset = 0
    for m in partition:
        for t in range(m):
            h[(offset + t, offset + t)] = m - 1 - 2 * t
        for t in range(m - 1):
            e[(offset + t, offset + t + 1)] = 1
            f[(offset + t + 1, offset + t)] = (t + 1) * (m - t - 1)
        offset += m
    return (ComplexMatrix.from_entries(size, h), ComplexMatrix.from_entries(size, e),
            ComplexMatrix.from_entries(size, f))


def _null_pair(size: int, x: int, y: int) -> Tuple[Vector, Vector]:
    """p = (x - y)/2 and q = x + y for a positive unit x and a negative unit y, so that G(p, q) = 1."""
    return (_unit_vector(size, (x, Fraction(1, 2)), (y, Fraction(-1, 2))), _unit_vector(size, (x, 1), (y, 1)))


def contact_matrices(algebra: MatrixLieAlgebra) -> Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    """
    Matrices (h, e, f) of the canonical contact sl2-triple of a classical family.
    :raises InvalidRealFormException: the family or its parameters carry no contact gradation
    """
    key, params, n = algebra.family.key, algebra.params, algebra.size
    if key in ('sl_R', 'sl_C'):
        return (ComplexMatrix.diagonal([-1] + [0] * (n - 2) + [1]), ComplexMatrix.unit(n, n - 1, 0),
                ComplexMatrix.unit(n, 0, n - 1))
    if key in ('sp_R', 'sp_C'):
        m = n // 2
        return (ComplexMatrix.from_entries(n, {(0, 0): -1, (m, m): 1}), ComplexMatrix.unit(n, m, 0),
                ComplexMatrix.unit(n, 0, m))
    if key == 'su' and params.get('form') is None and params['p'] >= 1 and params['q'] >= 1:
        form = _signature(params['p'], params['q'])
        p, q = _null_pair(n, 0, params['p'])
        h = _hermitian_outer(q, p, form) - _hermitian_outer(p, q, form)
        return h, _hermitian_outer(q, q, form).scale((0, 1)), _hermitian_outer(p, p, form).scale((0, -1))
    if key == 'so' and params['p'] >= 2 and params['q'] >= 2:
        form = _signature(params['p'], params['q'])
        p, q = _null_pair(n, 0, params['p'])
        p2, q2 = _null_pair(n, 1, params['p'] + 1)
        return wedge(q, p, form) + wedge(q2, p2, form), wedge(q, q2, form), wedge(p2, p, form)
    if key == 'so_star' and params['n'] >= 2:
        m = params['n']
        form = split_symmetric_form(n)
        half = Fraction(1, 2)
        p = _unit_vector(n, (0, 1), (m + 1, (0, 1)))
        p2 = _unit_vector(n, (1, 1), (m, (0, -1)))
        q = _unit_vector(n, (m, half), (1, (0, -half)))
        q2 = _unit_vector(n, (m + 1, half), (0, (0, half)))
        return wedge(q, p, form) + wedge(q2, p2, form), wedge(q, q2, form), wedge(p2, p, form)
    raise InvalidRealFormException(algebra.name, dict(params, contact_triple='unavailable'))


def vector_matrices(algebra: MatrixLieAlgebra) -> Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    """so(1,2) acting on a Lorentzian 3-space inside so(p,q), p >= 1, q >= 2."""
    if algebra.family.key != 'so' or algebra.params['p'] < 1 or algebra.params['q'] < 2:
        raise InvalidRealFormException(algebra.name, dict(algebra.params, vector_triple='unavailable'))
    n, p_dim = algebra.size, algebra.params['p']
    form = _signature(p_dim, algebra.params['q'])
    p, q = _null_pair(n, 0, p_dim)
    u = _unit_vector(n, (p_dim + 1, 1))
    return wedge(q, p, form).scale(2), wedge(q, u, form), wedge(p, u, form).scale(2)


def contact_triple(algebra: LieAlgebra) -> Tuple[SparseVector, SparseVector, SparseVector]:
    """Coordinates (h, e, f) of the canonical contact triple of a classical form or of a realified one."""
    base = getattr(algebra, 'base', None)
    if base is not None:
        lift = getattr(algebra, 'lift')
        return tuple(lift(vector) for vector in contact_triple(base))  # type: ignore
    if not isinstance(algebra, MatrixLieAlgebra):
        raise InvalidRealFormException(algebra.name, {'contact_triple': 'no matrix realization'})
    return tuple(algebra.element(matrix) for matrix in contact_matrices(algebra))  # type: ignore

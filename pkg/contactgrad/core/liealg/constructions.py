"""Derived constructions: normal real forms, realification and direct sums."""
import logging
from typing import Optional, Sequence, Union

from ...__types__ import SparseVector, StructureTable
from ...exceptions import FieldMismatchException, NotInAlgebraException
from .base import FieldFlag, LieAlgebra, Provenance
from .chevalley import chevalley_algebra
from .classical import ComplexMatrix

LOGGER = logging.getLogger(__name__)

__all__ = ["split_real_form", "split_form_name", "realify", "direct_sum", "RealifiedAlgebra"]


def split_form_name(type_label: str, rank: int) -> str:
    n = rank
    return {
        'A': "sl({m},R)".format(m=n + 1),
        'B': "so({n},{m})".format(n=n, m=n + 1),
        'C': "sp({n},R)".format(n=n),
        'D': "so({n},{n})".format(n=n),
    }.get(type_label, "{t}{n}({n})".format(t=type_label.lower(), n=n if type_label != 'G' else 2))


def split_real_form(complex_form: Union[LieAlgebra, str], rank: Optional[int] = None) -> LieAlgebra:
    """The normal real form: real span of a Chevalley basis. Accepts a Chevalley algebra or a type label and rank."""
    if isinstance(complex_form, str):
        complex_form = chevalley_algebra(complex_form, rank)
    rs = complex_form.root_system
    if rs is None or complex_form.provenance.kind != Provenance.CHEVALLEY:
        raise FieldMismatchException(complex_form.name, "Chevalley basis")
    provenance = Provenance(Provenance.SPLIT, split_form_name(rs.type_label, rs.rank),
                            {"type": rs.type_label, "rank": rs.rank}, (complex_form.provenance,))
    return LieAlgebra(complex_form.basis_labels, complex_form.structure, FieldFlag.REAL, provenance,
                      cartan_indices=complex_form.cartan_indices, root_system=complex_form.root_system,
                      basis_roots=complex_form.basis_roots)


class RealifiedAlgebra(LieAlgebra):
    """A complex Lie algebra seen as a real one: basis b_k followed by i*b_k."""

    def __init__(self, base: LieAlgebra):
        n = base.dim
        structure = {}  # type: StructureTable
        for (a, b), vector in base.structure.items():
            shifted = {k + n: c for k, c in vector.items()}
            negated = {k: -c for k, c in vector.items()}
            structure[(a, b)] = dict(vector)
            structure[(a, b + n)] = dict(shifted)
            structure[(b, a + n)] = {k: -c for k, c in shifted.items()}
            structure[(a + n, b + n)] = negated
        labels = list(base.basis_labels) + ["i*" + label for label in base.basis_labels]
        provenance = Provenance(Provenance.REALIFICATION, "{name}_R".format(name=base.name), {}, (base.provenance,))
        super().__init__(labels, structure, FieldFlag.REAL, provenance,
                         cartan_indices=list(base.cartan_indices) + [k + n for k in base.cartan_indices])
        self.base = base

    def lift(self, vector: SparseVector, imaginary: Optional[SparseVector] = None) -> SparseVector:
        """x + i y for x, y in the complex algebra."""
        result = dict(vector)
        for k, c in (imaginary or {}).items():
            result[k + self.base.dim] = c
        return result

    def times_i(self, vector: SparseVector) -> SparseVector:
        """Multiplication by the complex unit: b_k -> i*b_k, i*b_k -> -b_k."""
        n = self.base.dim
        return {(k + n if k < n else k - n): (c if k < n else -c) for k, c in vector.items()}

    def element(self, matrix) -> SparseVector:
        """Coordinates of a complex matrix, for realifications of matrix algebras."""
        convert = getattr(self.base, 'element', None)
        if convert is None:
            raise NotInAlgebraException("{name} has no matrix realization".format(name=self.name))
        real = ComplexMatrix(matrix.re)
        imaginary = ComplexMatrix(matrix.im)
        return self.lift(convert(real), convert(imaginary))


def realify(L: LieAlgebra) -> RealifiedAlgebra:
    """
    :raises FieldMismatchException: the algebra is already real
    """
    if L.field_flag.is_real:
        raise FieldMismatchException(L.field_flag.value, FieldFlag.COMPLEX.value)
    algebra = RealifiedAlgebra(L)
    LOGGER.debug("Realified %s (dim %d)", L.name, algebra.dim)
    return algebra


def direct_sum(*algebras: LieAlgebra) -> LieAlgebra:
    """
    Direct sum over a common field; basis labels are prefixed with the summand position.
    :raises FieldMismatchException: summands over different fields
    """
    flags = {algebra.field_flag for algebra in algebras}
    if len(flags) != 1:
        raise FieldMismatchException(*sorted(flag.value for flag in flags)[:2])
    structure = {}  # type: StructureTable
    labels = []
    offset = 0
    cartan = []
    for position, algebra in enumerate(algebras):
        for (a, b), vector in algebra.structure.items():
            structure[(a + offset, b + offset)] = {k + offset: c for k, c in vector.items()}
        labels.extend("{p}:{label}".format(p=position + 1, label=label) for label in algebra.basis_labels)
        cartan.extend(k + offset for k in algebra.cartan_indices)
        offset += algebra.dim
    name = " + ".join(algebra.name for algebra in algebras)
    provenance = Provenance(Provenance.DIRECT_SUM, name, {}, [algebra.provenance for algebra in algebras])
    return LieAlgebra(labels, structure, flags.pop(), provenance, cartan_indices=cartan)


def summand_vector(algebras: Sequence[LieAlgebra], position: int, vector: SparseVector) -> SparseVector:
    """Embeds a vector of summand `position` (0-based) into the direct sum."""
    offset = sum(algebra.dim for algebra in algebras[:position])
    return {k + offset: c for k, c in vector.items()}

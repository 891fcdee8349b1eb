"""Chevalley bases of the complex simple Lie algebras."""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from ...__types__ import RootCoords, StructureTable
from ..rootsys import RootSystem, build_root_system
from .base import FieldFlag, LieAlgebra, Provenance

LOGGER = logging.getLogger(__name__)

__all__ = ["chevalley_algebra", "structure_constants", "dump_structure"]


def _negate(root: RootCoords) -> RootCoords:
    return tuple(-c for c in root)


def _plus(left: RootCoords, right: RootCoords) -> RootCoords:
    return tuple(a + b for a, b in zip(left, right))


def _minus(left: RootCoords, right: RootCoords) -> RootCoords:
    return tuple(a - b for a, b in zip(left, right))


def _is_positive(root: RootCoords) -> bool:
    return any(c > 0 for c in root)


class _StructureConstants:
    """
    N_{a,b} for roots a, b with a + b a root, from extraspecial pairs with all signs positive.
    Positive pairs are filled in order of height; every other pair reduces to a positive one.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.positive = {}  # type: Dict[Tuple[RootCoords, RootCoords], Fraction]
        order = {root: k for k, root in enumerate(rs.positive_roots)}
        for xi in rs.positive_roots:
            if rs.height(xi) == 1:
                continue
            alpha = min((a for a in rs.positive_roots if rs.height(a) < rs.height(xi)
                         and _minus(xi, a) in order), key=order.get)
            beta = _minus(xi, alpha)
            p = 0
            while rs.is_root(_minus(beta, tuple((p + 1) * c for c in alpha))):
                p += 1
            n_alpha_beta = Fraction(p + 1)
            self.positive[(alpha, beta)] = n_alpha_beta
            self.positive[(beta, alpha)] = -n_alpha_beta
            norm_xi = rs.inner(xi, xi)
            for gamma in rs.positive_roots:
                delta = _minus(xi, gamma)
                if delta not in order or (gamma, delta) in self.positive:
                    continue
                total = Fraction(0)
                beta_gamma = _minus(beta, gamma)
                if self.rs.is_root(beta_gamma):
                    total += self.value(beta, _negate(gamma)) * self.value(beta_gamma, alpha)
                alpha_gamma = _minus(alpha, gamma)
                if self.rs.is_root(alpha_gamma):
                    total += self.value(_negate(gamma), alpha) * self.value(alpha_gamma, beta)
                value = norm_xi * total / (n_alpha_beta * rs.inner(delta, delta))
                self.positive[(gamma, delta)] = value
                self.positive[(delta, gamma)] = -value

    def value(self, a: RootCoords, b: RootCoords) -> Fraction:
        c = _plus(a, b)
        if not self.rs.is_root(c):
            return Fraction(0)
        a_pos, b_pos = _is_positive(a), _is_positive(b)
        if a_pos and b_pos:
            return self.positive[(a, b)]
        if not a_pos and not b_pos:
            return -self.value(_negate(a), _negate(b))
        if not a_pos:
            return -self.value(b, a)
        inner = self.rs.inner
        if _is_positive(c):
            return -inner(c, c) / inner(a, a) * self.value(_negate(b), c)
        return inner(c, c) / inner(b, b) * self.value(_negate(c), a)


def structure_constants(rs: RootSystem) -> Dict[Tuple[RootCoords, RootCoords], int]:
    """Every nonzero N_{a,b}, keyed by the pair of roots."""
    table = _StructureConstants(rs)
    result = {}
    for a in rs.roots:
        for b in rs.roots:
            value = table.value(a, b)
            if value:
                assert value.denominator == 1, "non-integral structure constant"
                result[(a, b)] = int(value)
    return result


def _label(root: RootCoords) -> str:
    prefix = 'e' if _is_positive(root) else 'f'
    return "{prefix}[{coords}]".format(prefix=prefix, coords=",".join(str(abs(c)) for c in root))


def chevalley_algebra(rs: Union[RootSystem, str], rank: Optional[int] = None) -> LieAlgebra:
    """
    Complex simple Lie algebra in its Chevalley basis: h[1..rank], then e[root] for positive roots in
    (height, lex) order, then f[root] in the same order. Accepts a RootSystem or a type label and rank.
    """
    if isinstance(rs, str):
        rs = build_root_system(rs, rank)
    return _chevalley_algebra(rs.type_label, rs.rank)


@lru_cache(maxsize=None)
def _chevalley_algebra(type_label: str, rank: int) -> LieAlgebra:
    rs = build_root_system(type_label, rank)
    r = rs.rank
    labels = ["h[{i}]".format(i=i + 1) for i in range(r)] + [_label(root) for root in rs.roots]
    index = {root: r + k for k, root in enumerate(rs.roots)}
    structure = {}  # type: StructureTable

    def put(i, j, vector):
        if i < j:
            structure[(i, j)] = vector
        else:
            structure[(j, i)] = {k: -c for k, c in vector.items()}

    for i in range(r):
        for root in rs.roots:
            pairing = rs.coroot_pairing(root, i + 1)
            if pairing:
                put(i, index[root], {index[root]: Fraction(pairing)})
    for root in rs.positive_roots:
        norm = rs.inner(root, root)
        coroot = {i: c * rs.gram[i][i] / norm for i, c in enumerate(root) if c}
        put(index[root], index[_negate(root)], coroot)
    for (a, b), value in structure_constants(rs).items():
        if index[a] < index[b]:
            structure[(index[a], index[b])] = {index[_plus(a, b)]: Fraction(value)}
    basis_roots = {index[root]: root for root in rs.roots}
    provenance = Provenance(Provenance.CHEVALLEY, rs.label, {"type": rs.type_label, "rank": rs.rank})
    algebra = LieAlgebra(labels, structure, FieldFlag.COMPLEX, provenance, cartan_indices=range(r),
                         root_system=rs, basis_roots=basis_roots)
    LOGGER.info("Built Chevalley basis of %s (dim %d, %d nonzero brackets)", rs.label, algebra.dim,
                len(algebra.structure))
    return algebra


def dump_structure(algebra: LieAlgebra) -> List[str]:
    """Canonical text form: one 'i j k c' line per nonzero constant, sorted."""
    lines = []
    for (i, j), vector in sorted(algebra.structure.items()):
        for k, c in sorted(vector.items()):
            lines.append("{i} {j} {k} {c}".format(i=i, j=j, k=k, c=c))
    return lines

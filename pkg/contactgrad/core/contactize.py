"""
Non-conical coadjoint orbits and their contactizations.

For theta = B(xi, .) the form d(theta)(x, y) = -theta([x, y]) has kernel k = Z(xi). The orbit is conical iff theta
vanishes on k; otherwise k = h + R eta with h = k & ker theta, and g = k + p for a complement p of h in ker theta on
which d(theta) is nondegenerate.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from sympy import Poly, Rational, Symbol

from ..__types__ import Covector, SparseVector
from ..exceptions import ConicalFormException, DegenerateContactFormException, ZeroFormException
from .linalg import Subspace, add, determinant, domain_matrix, dot, from_qq, nullspace, rank, scale
from .liealg import (FieldFlag, LieAlgebra, RealifiedAlgebra, centralizer_of_vectors, chevalley_algebra,
                     kernel_of_form, killing_orthogonal, realify, split_real_form)
from .rootsys import simple_types
from .sl2kit import Certificate

LOGGER = logging.getLogger(__name__)

__all__ = ["Contactization", "conical_check", "build_contactization", "verify_symplectic_symmetric",
           "isotropy_examples", "conicity_corpus"]

KILLING_COMPLEMENT = "killing-complement"
AD_IMAGE = "ad-image"


def _dtheta_rows(L: LieAlgebra, theta: Covector) -> List[SparseVector]:
    """Rows of the antisymmetric matrix theta([b_i, b_j])."""
    rows = [{} for _ in range(L.dim)]  # type: List[Dict[int, Fraction]]
    for (i, j), vector in L.structure.items():
        value = dot(theta, vector)
        if value:
            rows[i][j] = value
            rows[j][i] = -value
    return rows


def _restricted_pairing(L: LieAlgebra, theta: Covector, S: Subspace) -> List[SparseVector]:
    pairing = []
    for x in S.rows:
        row = {}
        for b, y in enumerate(S.rows):
            value = dot(theta, L.bracket(x, y))
            if value:
                row[b] = -value
        pairing.append(row)
    return pairing


def form_kernel(L: LieAlgebra, theta: Covector) -> Subspace:
    """k = {x : theta o ad_x = 0}, the kernel of d(theta)."""
    return L.subspace(nullspace(_dtheta_rows(L, theta), L.dim)[0])


def conical_check(L: LieAlgebra, theta: Covector) -> bool:
    """
    The orbit of theta is conical iff theta vanishes on the kernel of d(theta).
    :raises ZeroFormException: theta = 0
    """
    if not any(theta.values()):
        raise ZeroFormException()
    return all(not dot(theta, x) for x in form_kernel(L, theta).rows)


def _ad_square_spectrum(L: LieAlgebra, x: SparseVector) -> Tuple[bool, bool, bool]:
    """(has positive, has negative, has non-real) eigenvalues of ad_x squared."""
    ad = L.ad_matrix(x)
    matrix = domain_matrix([ad.get(k, {}) for k in range(L.dim)], L.dim)
    coefficients = [from_qq(c) for c in (matrix * matrix).to_dense().charpoly()]
    t = Symbol('t')
    poly = Poly([Rational(c.numerator, c.denominator) for c in coefficients], t)
    roots = poly.real_roots()
    return any(r > 0 for r in roots), any(r < 0 for r in roots), len(roots) < L.dim


def eta_type(L: LieAlgebra, eta: SparseVector) -> str:
    """
    'elliptic' when ad_eta has imaginary spectrum, 'hyperbolic' when it is real, 'mixed' otherwise;
    complex algebras have no such distinction and give 'complex'.
    """
    if not L.field_flag.is_real:
        return "complex"
    positive, negative, nonreal = _ad_square_spectrum(L, eta)
    if nonreal or (positive and negative):
        return "mixed"
    return "hyperbolic" if positive else "elliptic"


class Contactization:
    """Data k = h + R eta, g = k + p attached to a non-conical xi."""

    def __init__(self, ambient: LieAlgebra, xi: SparseVector, theta: Covector, k: Subspace, h: Subspace,
                 eta: SparseVector, p: Subspace, center_dim: int, derived_dim: int, p_strategy: str,
                 eta_in_center: bool = True):
        self.ambient = ambient
        self.xi = xi
        self.theta = theta
        self.k = k
        self.h = h
        self.eta = eta
        self.p = p
        self.center_dim = center_dim
        self.derived_dim = derived_dim
        self.p_strategy = p_strategy
        self.eta_in_center = eta_in_center
        self._eta_type = None  # type: Optional[str]

    def __repr__(self):
        return "Contactization({name}, k={k}, p={p})".format(name=self.ambient.name, k=self.k.dim, p=self.p.dim)

    @property
    def isotropic(self) -> bool:
        return not self.ambient.killing(self.xi, self.xi)

    @property
    def eta_type(self) -> str:
        if self._eta_type is None:
            self._eta_type = eta_type(self.ambient, self.eta)
        return self._eta_type

    @property
    def dims(self) -> Dict[str, int]:
        return {"k": self.k.dim, "h": self.h.dim, "p": self.p.dim, "center": self.center_dim,
                "derived": self.derived_dim}

    def check(self) -> List[str]:
        """Violated invariants; empty when all hold."""
        L = self.ambient
        problems = []
        if self.h.dim + 1 != self.k.dim:
            problems.append("codim_k(h) != 1")
        if any(dot(self.theta, x) for x in self.h.rows + self.p.rows):
            problems.append("theta does not vanish on h + p")
        if dot(self.theta, self.eta) != 1:
            problems.append("theta(eta) != 1")
        if not self.k.is_direct_sum_with(self.p) or self.k.dim + self.p.dim != L.dim:
            problems.append("g != k + p")
        for x in self.h.rows:
            if any(not self.h.contains(L.bracket(x, y)) for y in self.k.rows):
                problems.append("h is not an ideal of k")
                break
        for x in self.h.rows:
            if any(not self.p.contains(L.bracket(x, y)) for y in self.p.rows):
                problems.append("[h,p] not in p")
                break
        if form_kernel(L, self.theta) != self.k:
            problems.append("ker d(theta) != k")
        return problems

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.dims, algebra=self.ambient.name, xi=self.ambient.describe(self.xi),
                    eta=self.ambient.describe(self.eta), isotropic=self.isotropic, eta_type=self.eta_type,
                    p_strategy=self.p_strategy, eta_in_center=self.eta_in_center)


def _pick_eta(L: LieAlgebra, theta: Covector, candidates: Subspace) -> Optional[SparseVector]:
    for x in candidates.rows:
        value = dot(theta, x)
        if value:
            return scale(x, 1 / value)
    return None


def _complement_in_kernel(L: LieAlgebra, xi: SparseVector, k: Subspace, h: Subspace,
                          ker_theta: Subspace) -> Tuple[Subspace, str]:
    p = killing_orthogonal(L, k, within=ker_theta)
    if h.is_direct_sum_with(p) and h.dim + p.dim == ker_theta.dim:
        return p, KILLING_COMPLEMENT
    LOGGER.debug("Killing complement of k is not a complement of h in ker theta, using the image of ad_xi")
    return L.subspace(L.bracket(xi, {i: Fraction(1)}) for i in range(L.dim)), AD_IMAGE


def build_contactization(L: LieAlgebra, xi: SparseVector) -> Contactization:
    """
    Contactization data of the orbit of theta = B(xi, .).
    :raises ZeroFormException: theta = 0
    :raises ConicalFormException: theta vanishes on k
    :raises DegenerateContactFormException: d(theta) degenerates on the computed p
    """
    theta = L.killing_covector(xi)
    if not any(theta.values()):
        raise ZeroFormException()
    k = form_kernel(L, theta)
    if all(not dot(theta, x) for x in k.rows):
        raise ConicalFormException()
    h = kernel_of_form(L, theta, within=k)
    center_k = L.center(k)
    eta = _pick_eta(L, theta, center_k)
    eta_in_center = eta is not None
    if eta is None:
        eta = _pick_eta(L, theta, k)
    ker_theta = kernel_of_form(L, theta)
    p, strategy = _complement_in_kernel(L, xi, k, h, ker_theta)
    pairing = _restricted_pairing(L, theta, p)
    if not determinant(pairing, p.dim):
        raise DegenerateContactFormException(rank(pairing, p.dim), p.dim)
    result = Contactization(L, xi, theta, k, h, eta, p, center_k.dim, L.derived_algebra(k).dim, strategy,
                            eta_in_center)
    LOGGER.debug("Contactization of %s at %s: %s (%s)", L.name, L.describe(xi), result.dims, strategy)
    return result


def _ad_square_on(L: LieAlgebra, xi: SparseVector, S: Subspace) -> Optional[Tuple[Fraction, Fraction]]:
    """
    (a, b) with ad_xi^2 = a + b J on S, J the complex structure of a realified algebra (b = 0 otherwise), or None
    when ad_xi^2 is not such a scalar there.
    """
    value = None
    for y in S.rows:
        image = L.bracket(xi, L.bracket(xi, y))
        pivot = min(y)
        if not isinstance(L, RealifiedAlgebra):
            c = (image.get(pivot, Fraction(0)) / y[pivot], Fraction(0))
            twisted = {}  # type: SparseVector
        else:
            n = L.base.dim
            m = pivot % n
            zr, zi = y.get(m, Fraction(0)), y.get(m + n, Fraction(0))
            wr, wi = image.get(m, Fraction(0)), image.get(m + n, Fraction(0))
            norm = zr * zr + zi * zi
            c = ((wr * zr + wi * zi) / norm, (wi * zr - wr * zi) / norm)
            twisted = L.times_i(y)
        candidate = add(scale(y, c[0]), twisted, c[1])
        if add(image, candidate, Fraction(-1)):
            return None
        if value is not None and c != value:
            return None
        value = c
    return value


def _format_scalar(value: Tuple[Fraction, Fraction]) -> str:
    real, imaginary = value
    if not imaginary:
        return str(real)
    if not real:
        return "{b}i".format(b=imaginary)
    return "{a}{sign}{b}i".format(a=real, sign="+" if imaginary > 0 else "-", b=abs(imaginary))


def verify_symplectic_symmetric(L: LieAlgebra, xi: SparseVector,
                                contactization: Optional[Contactization] = None) -> Certificate:
    """
    [p, p] in k, [k, p] in p and d(theta) ad_k-invariant on p. The scalar lambda^2 = ad_xi^2 on p and the type of
    the eigenvalues +-lambda are reported alongside; a complex lambda^2 gives 'complex'.
    """
    data = contactization or build_contactization(L, xi)
    k, p, theta = data.k, data.p, data.theta
    pp_in_k = all(k.contains(L.bracket(x, y)) for a, x in enumerate(p.rows) for y in p.rows[a + 1:])
    kp_in_p = all(p.contains(L.bracket(x, y)) for x in k.rows for y in p.rows)
    invariant = all(not (dot(theta, L.bracket(L.bracket(x, y), z)) + dot(theta, L.bracket(y, L.bracket(x, z))))
                    for x in k.rows for a, y in enumerate(p.rows) for z in p.rows[a + 1:])
    lambda_squared = _ad_square_on(L, xi, p)
    if lambda_squared is None or not any(lambda_squared):
        eigenvalues = "more than two"
    elif lambda_squared[1] or L.field_flag == FieldFlag.COMPLEX:
        eigenvalues = "complex"
    else:
        eigenvalues = "real" if lambda_squared[0] > 0 else "imaginary"
    return Certificate(pp_in_k and kp_in_p and invariant, pp_in_k=pp_in_k, kp_in_p=kp_in_p, invariant=invariant,
                       lambda_squared=None if lambda_squared is None else _format_scalar(lambda_squared),
                       eigenvalues=eigenvalues, **data.dims)


def isotropy_examples(lambdas: Tuple[Tuple[int, int], ...] = ((1, 0), (0, 1), (1, 1))) -> List[Dict[str, Any]]:
    """
    Realified sl(2,C) with xi = lambda h for lambda = a + ib: B(h,h), B(e,f), the isotropy of xi against
    Re(lambda^2) = a^2 - b^2 and the contactization k = Ch, p = Ce + Cf.
    """
    L = realify(chevalley_algebra('A', 1))
    h, e, f = (L.vector({label: 1}) for label in L.base.basis_labels)
    rows = []
    for a, b in lambdas:
        xi = L.lift(scale(h, Fraction(a)), scale(h, Fraction(b)))
        data = build_contactization(L, xi)
        rows.append({"lambda": "{a}+{b}i".format(a=a, b=b), "B(h,h)": L.killing(h, h), "B(e,f)": L.killing(e, f),
                     "isotropic": data.isotropic, "re_lambda_squared": a * a - b * b,
                     "conical": conical_check(L, data.theta), "k": data.k.dim, "p": data.p.dim,
                     "k_is_Ch": data.k == L.subspace([h, L.lift({}, h)]),
                     "p_is_Ce_Cf": data.p == L.subspace([e, f, L.lift({}, e), L.lift({}, f)])})
    return rows


def conicity_corpus(max_rank: int) -> Iterator[Tuple[LieAlgebra, str, bool, bool]]:
    """
    (algebra, basis label, conical, nilpotent) for every Cartan basis element and root vector of every normal real
    form up to the given rank; conical_check(B(x, .)) holds iff x is nilpotent.
    """
    for type_label, rank_ in simple_types(max_rank):
        L = split_real_form(type_label, rank_)
        for index, label in enumerate(L.basis_labels):
            x = L.basis_vector(index)
            yield L, label, conical_check(L, L.killing_covector(x)), L.is_nilpotent(x)


def centralizer_matches_kernel(L: LieAlgebra, xi: SparseVector) -> bool:
    """Z(xi) = ker d(theta) for theta = B(xi, .)."""
    return centralizer_of_vectors(L, xi) == form_kernel(L, L.killing_covector(xi))

import pytest

from contactgrad import exceptions
from contactgrad.core.contactize import (build_contactization, centralizer_matches_kernel, conical_check,
                                         conicity_corpus, isotropy_examples, verify_symplectic_symmetric)
from contactgrad.core.linalg import dot
from contactgrad.core.liealg import (ComplexMatrix, chevalley_algebra, classical_form, element, realify,
                                     split_real_form)

ROTATION = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]


def test_nilpotent_forms_are_conical():
    L = split_real_form('A', 1)
    h, e, _ = (L.basis_vector(i) for i in range(3))
    assert conical_check(L, L.killing_covector(e))
    assert not conical_check(L, L.killing_covector(h))


def test_conicity_corpus_agrees_with_nilpotency():
    for L, label, conical, nilpotent in conicity_corpus(2):
        assert conical == nilpotent, "{algebra} {label}".format(algebra=L.name, label=label)


def test_zero_and_conical_forms_are_rejected():
    L = split_real_form('A', 1)
    with pytest.raises(exceptions.ZeroFormException):
        conical_check(L, {})
    with pytest.raises(exceptions.ZeroFormException):
        build_contactization(L, {})
    with pytest.raises(exceptions.ConicalFormException):
        build_contactization(L, L.basis_vector(1))


def test_rotation_in_so3():
    L = classical_form('so', p=3, q=0)
    xi = element(L, ROTATION)
    data = build_contactization(L, xi)
    assert data.dims == {"k": 1, "h": 0, "p": 2, "center": 1, "derived": 0}
    assert data.check() == []
    assert data.eta_in_center
    assert data.eta_type == "elliptic"
    assert not data.isotropic
    certificate = verify_symplectic_symmetric(L, xi, data)
    assert certificate, certificate.to_dict()
    assert certificate.eigenvalues == "imaginary"
    assert centralizer_matches_kernel(L, xi)


def test_hyperbolic_element_of_sl2():
    L = classical_form('sl_R', n=2)
    xi = element(L, [[1, 0], [0, -1]])
    data = build_contactization(L, xi)
    assert data.eta_type == "hyperbolic"
    certificate = verify_symplectic_symmetric(L, xi, data)
    assert certificate
    assert certificate.eigenvalues == "real"
    assert certificate.lambda_squared == "4"


def test_compact_center_in_su12():
    L = classical_form('su', p=1, q=2)
    xi = element(L, ComplexMatrix.from_entries(3, {(0, 0): (0, 2), (1, 1): (0, -1), (2, 2): (0, -1)}))
    data = build_contactization(L, xi)
    assert (data.k.dim, data.center_dim, data.derived_dim) == (4, 1, 3), "k = u(2) = R + su(2)"
    assert data.p.dim == 4
    certificate = verify_symplectic_symmetric(L, xi, data)
    assert certificate
    assert certificate.eigenvalues == "imaginary"


def test_isotropy_examples():
    rows = isotropy_examples()
    assert [row["isotropic"] for row in rows] == [False, False, True]
    assert [row["re_lambda_squared"] for row in rows] == [1, -1, 0]
    for row in rows:
        assert row["B(h,h)"] == 16 and row["B(e,f)"] == 8
        assert not row["conical"]
        assert (row["k"], row["p"]) == (2, 4)
        assert row["k_is_Ch"] and row["p_is_Ce_Cf"], row["lambda"]


def test_regular_element_of_sl3():
    L = classical_form('sl_R', n=3)
    xi = element(L, [[1, 0, 0], [0, 0, 0], [0, 0, -1]])
    data = build_contactization(L, xi)
    assert data.k.dim == 2
    assert data.check() == []
    assert dot(data.theta, data.eta) == 1
    assert data.center_dim == 2


def test_generic_regular_element_of_sl3_is_not_symmetric():
    L = classical_form('sl_R', n=3)
    xi = element(L, [[3, 0, 0], [0, -1, 0], [0, 0, -2]])
    certificate = verify_symplectic_symmetric(L, xi)
    assert not certificate
    assert certificate.pp_in_k is False
    assert certificate.kp_in_p
    assert certificate.eigenvalues == "more than two"
    assert certificate.lambda_squared is None


def test_complex_lambda_in_realified_sl2():
    L = realify(chevalley_algebra('A', 1))
    h = L.basis_vector(0)
    xi = L.lift(h, h)
    data = build_contactization(L, xi)
    assert data.check() == []
    certificate = verify_symplectic_symmetric(L, xi, data)
    assert certificate, certificate.to_dict()
    assert certificate.pp_in_k and certificate.kp_in_p and certificate.invariant
    assert certificate.eigenvalues == "complex"
    assert certificate.lambda_squared == "8i"
    assert verify_symplectic_symmetric(L, h).lambda_squared == "4"

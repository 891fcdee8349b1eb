from fractions import Fraction

import pytest

from contactgrad import exceptions
from contactgrad.core.liealg import (FAMILIES, ComplexMatrix, FieldFlag, bracket, center, centralizer_of_vectors,
                                     chevalley_algebra, classical_form, direct_sum, dump_structure, element,
                                     jacobi_check, killing_orthogonal, normalizer_of_line, realify, split_real_form,
                                     unitary_form)
from contactgrad.core.liealg.classical import to_complex_pair
from contactgrad.core.liealg.constructions import summand_vector
from contactgrad.core.rootsys import expected_root_count, simple_types


def test_a1_structure_constants_golden():
    assert dump_structure(chevalley_algebra('A', 1)) == ["0 1 1 2", "0 2 2 -2", "1 2 0 1"]


def test_chevalley_basis_order():
    L = chevalley_algebra('A', 2)
    assert L.basis_labels == ["h[1]", "h[2]", "e[0,1]", "e[1,0]", "e[1,1]", "f[0,1]", "f[1,0]", "f[1,1]"]
    assert L.index_of_root((-1, -1)) == 7
    assert L.root_of(7) == (-1, -1) and L.root_of(0) is None
    assert L.field_flag == FieldFlag.COMPLEX


@pytest.mark.parametrize("type_label,rank", list(simple_types(4)))
def test_chevalley_dimension_and_jacobi(type_label, rank):
    L = chevalley_algebra(type_label, rank)
    assert L.dim == expected_root_count(type_label, rank) + rank
    report = jacobi_check(L, exhaustive_max_dim=30, samples=500, seed=1)
    assert report.ok, "Jacobi identity violated on {triples}".format(triples=report.violations[:3])


def test_jacobi_sampled_mode():
    report = jacobi_check(chevalley_algebra('F', 4), exhaustive_max_dim=10, samples=200, seed=7)
    assert not report.exhaustive
    assert report.ok
    assert report.to_dict()["mode"] == "sampled"


def test_jacobi_samples_are_distinct():
    report = jacobi_check(chevalley_algebra('A', 2), exhaustive_max_dim=0, samples=10 ** 5, seed=7)
    assert not report.exhaustive
    assert report.triples == 56, "Every one of the C(8, 3) triples"
    assert jacobi_check(chevalley_algebra('B', 3), exhaustive_max_dim=0, samples=1000, seed=7).triples >= 1000


def test_killing_form_of_a1():
    L = chevalley_algebra('A', 1)
    h, e, f = (L.basis_vector(i) for i in range(3))
    assert L.killing(h, h) == 8
    assert L.killing(e, f) == 4
    assert L.killing(e, e) == 0


def test_bracket_checks_dimensions():
    L = chevalley_algebra('A', 1)
    with pytest.raises(exceptions.DimensionMismatchException):
        bracket(L, {5: Fraction(1)}, {0: Fraction(1)})


def test_centralizer_and_normalizer():
    L = split_real_form('A', 1)
    h, e, _ = (L.basis_vector(i) for i in range(3))
    assert centralizer_of_vectors(L, h) == L.subspace([h])
    assert normalizer_of_line(L, e) == L.subspace([h, e])
    assert center(L, L.subspace([h, e])).dim == 0
    assert killing_orthogonal(L, L.subspace([h])) == L.subspace([e, L.basis_vector(2)])
    assert L.is_nilpotent(e) and not L.is_nilpotent(h)


def test_split_real_form_keeps_structure():
    complex_form = chevalley_algebra('G', 2)
    L = split_real_form('G', 2)
    assert L.field_flag.is_real
    assert L.structure == complex_form.structure
    assert L.name == "g2(2)"
    assert split_real_form('A', 3).name == "sl(4,R)"


@pytest.mark.parametrize("key,params,dim", [
    ('sl_R', {'n': 3}, 8),
    ('su', {'p': 1, 'q': 2}, 8),
    ('su', {'p': 3, 'q': 0}, 8),
    ('su_star', {'n': 2}, 15),
    ('so', {'p': 2, 'q': 3}, 10),
    ('so_star', {'n': 3}, 15),
    ('sp_R', {'n': 2}, 10),
    ('sp', {'p': 1, 'q': 1}, 10),
    ('sl_C', {'n': 2}, 3),
    ('so_C', {'n': 4}, 6),
    ('sp_C', {'n': 1}, 3),
])
def test_classical_forms(key, params, dim):
    L = classical_form(key, **params)
    assert L.dim == dim == FAMILIES[key].dim(**params)
    assert L.is_subalgebra(L.subspace([L.basis_vector(i) for i in range(L.dim)]))
    assert jacobi_check(L, exhaustive_max_dim=15, samples=300, seed=3).ok


def test_classical_form_errors():
    with pytest.raises(exceptions.UnknownRealFormException):
        classical_form('foo', n=2)
    with pytest.raises(exceptions.InvalidRealFormException):
        classical_form('so', p=1, q=1)
    with pytest.raises(exceptions.InvalidRealFormException):
        classical_form('sl_R', m=3)


def test_matrix_element_round_trip():
    L = classical_form('sl_R', n=2)
    matrix = ComplexMatrix.diagonal([1, -1])
    assert L.matrix(element(L, matrix)) == matrix
    with pytest.raises(exceptions.NotInAlgebraException):
        element(L, [[1, 0], [0, 1]])


def test_unitary_form_signature():
    L = unitary_form([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert L.params['p'] == 2 and L.params['q'] == 1, "The form [[0,1],[1,0]] + [1] has signature (2,1)"
    assert L.dim == 8
    with pytest.raises(exceptions.InvalidRealFormException):
        unitary_form([[0, 1], [0, 0]])


def test_realify():
    base = chevalley_algebra('A', 1)
    L = realify(base)
    assert L.dim == 6
    assert L.field_flag.is_real
    h = L.basis_vector(0)
    assert L.killing(h, h) == 16, "The real Killing form is twice the real part of the complex one"
    i_e = L.lift({}, base.basis_vector(1))
    assert L.bracket(h, i_e) == L.lift({}, {1: Fraction(2)})
    with pytest.raises(exceptions.FieldMismatchException):
        realify(L)


def test_direct_sum():
    A = split_real_form('A', 1)
    D = direct_sum(A, A)
    assert D.dim == 6
    assert D.basis_labels[3] == "2:h[1]"
    left = summand_vector([A, A], 0, A.basis_vector(1))
    right = summand_vector([A, A], 1, A.basis_vector(2))
    assert D.bracket(left, right) == {}
    with pytest.raises(exceptions.FieldMismatchException):
        direct_sum(A, chevalley_algebra('A', 1))


def test_complex_entries():
    assert to_complex_pair("1/2 - I") == (Fraction(1, 2), Fraction(-1))
    assert to_complex_pair("2*I") == (Fraction(0), Fraction(2))
    assert to_complex_pair((3, 1)) == (Fraction(3), Fraction(1))
    for value in ["__import__('os')", "n", "I.conjugate()", "True"]:
        with pytest.raises(ValueError):
            to_complex_pair(value)

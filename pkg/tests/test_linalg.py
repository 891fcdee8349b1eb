from fractions import Fraction

from contactgrad.core.linalg import Subspace, add, combine, determinant, dot, nullspace, rank, rref, scale, span


def test_add_drops_cancelled_entries():
    assert add({0: Fraction(1), 1: Fraction(2)}, {1: Fraction(2)}, Fraction(-1)) == {0: Fraction(1)}
    assert scale({0: Fraction(3)}, 0) == {}
    assert combine([(Fraction(1), {0: Fraction(1)}), (Fraction(-1), {0: Fraction(1)})]) == {}
    assert dot({0: Fraction(2), 3: Fraction(1)}, {3: Fraction(5)}) == 5


def test_rref_returns_pivots():
    rows, pivots = rref([{0: Fraction(2), 1: Fraction(4)}, {0: Fraction(1), 1: Fraction(2)}, {2: Fraction(3)}], 3)
    assert pivots == [0, 2]
    assert rows[0] == {0: Fraction(1), 1: Fraction(2)}
    assert rows[1] == {2: Fraction(1)}
    assert rank([], 4) == 0


def test_nullspace_coordinates_at_free_columns():
    basis, free = nullspace([{0: Fraction(1), 1: Fraction(1)}, {2: Fraction(1)}], 4)
    assert free == [1, 3]
    assert basis == [{1: Fraction(1), 0: Fraction(-1)}, {3: Fraction(1)}]


def test_determinant_is_exact():
    assert determinant([{0: Fraction(1, 2), 1: Fraction(1)}, {0: Fraction(1), 1: Fraction(1, 3)}], 2) == \
        Fraction(1, 6) - 1
    assert determinant([], 0) == 1


def test_subspace_equality_ignores_spanning_set():
    left = span(3, [{0: Fraction(1)}, {1: Fraction(1)}])
    right = span(3, [{0: Fraction(1), 1: Fraction(1)}, {0: Fraction(1), 1: Fraction(-1)}])
    assert left == right, "Subspaces with equal spans should compare equal"
    assert left != Subspace.full(3)
    assert left.contains({0: Fraction(5), 1: Fraction(-2)})
    assert not left.contains({2: Fraction(1)})


def test_subspace_intersection_and_sum():
    xy = span(3, [{0: Fraction(1)}, {1: Fraction(1)}])
    yz = span(3, [{1: Fraction(1)}, {2: Fraction(1)}])
    assert xy.intersection(yz) == span(3, [{1: Fraction(1)}])
    assert (xy + yz).dim == 3
    assert not xy.is_direct_sum_with(yz)
    assert xy.is_direct_sum_with(span(3, [{2: Fraction(1)}]))
    assert xy.intersection(Subspace.zero(3)).dim == 0
    assert (xy + yz).contains_subspace(xy) and not xy.contains_subspace(yz)


def test_solve_within():
    plane = span(3, [{0: Fraction(1)}, {1: Fraction(1)}])
    line = plane.solve_within([{0: Fraction(1), 1: Fraction(1)}])
    assert line == span(3, [{0: Fraction(1), 1: Fraction(-1)}])
    assert plane.annihilator() == [{2: Fraction(1)}]

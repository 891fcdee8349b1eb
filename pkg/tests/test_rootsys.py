import pytest

from contactgrad import exceptions
from contactgrad.core.rootsys import (build_root_system, contact_grading_node_set, depth_one_node_set,
                                      expected_root_count, highest_root_in_weights, simple_types)


@pytest.mark.parametrize("type_label,rank", list(simple_types(8)))
def test_root_system_invariants(type_label, rank):
    rs = build_root_system(type_label, rank)
    assert len(rs.roots) == expected_root_count(type_label, rank), "Root count should follow the closed form"
    assert rs.check_invariants() == []


def test_simple_types_order():
    types = list(simple_types(2))
    assert types == [('A', 1), ('A', 2), ('B', 2), ('G', 2)]
    assert len(list(simple_types(8))) == 8 + 7 + 6 + 5 + 3 + 1 + 1


def test_g2_roots():
    rs = build_root_system('G', 2)
    assert rs.highest_root == (3, 2)
    assert rs.highest_short_root == (2, 1)
    assert rs.is_long((0, 1)) and not rs.is_long((1, 0)), "alpha_2 is the long simple root of G2"
    assert rs.cartan == ((2, -1), (-3, 2))


def test_simply_laced_has_no_short_root():
    assert build_root_system('E', 6).highest_short_root is None
    assert build_root_system('D', 5).highest_short_root is None


@pytest.mark.parametrize("type_label,rank,weights", [
    ('A', 1, {1: 2}),
    ('A', 4, {1: 1, 4: 1}),
    ('B', 2, {2: 2}),
    ('B', 5, {2: 1}),
    ('C', 4, {1: 2}),
    ('D', 6, {2: 1}),
    ('E', 6, {2: 1}),
    ('E', 7, {1: 1}),
    ('E', 8, {8: 1}),
    ('F', 4, {1: 1}),
    ('G', 2, {2: 1}),
])
def test_highest_root_in_fundamental_weights(type_label, rank, weights):
    assert highest_root_in_weights(build_root_system(type_label, rank)) == weights


def test_node_sets():
    assert contact_grading_node_set(build_root_system('A', 3)) == frozenset({1, 3})
    assert contact_grading_node_set(build_root_system('E', 8)) == frozenset({8})
    assert depth_one_node_set(build_root_system('A', 3)) == frozenset({1, 2, 3})
    assert depth_one_node_set(build_root_system('E', 6)) == frozenset({1, 6})
    assert depth_one_node_set(build_root_system('E', 7)) == frozenset({7})
    assert depth_one_node_set(build_root_system('E', 8)) == frozenset(), "E8 has no mark-1 node"
    assert depth_one_node_set(build_root_system('G', 2)) == frozenset()


def test_dynkin_marks_of_e8():
    assert build_root_system('E', 8).dynkin_marks == {1: 2, 2: 3, 3: 4, 4: 6, 5: 5, 6: 4, 7: 3, 8: 2}


@pytest.mark.parametrize("type_label,rank", [('D', 3), ('E', 9), ('B', 1), ('X', 2), ('C', 2)])
def test_invalid_root_system(type_label, rank):
    with pytest.raises(exceptions.InvalidRootSystemException):
        build_root_system(type_label, rank)


def test_not_a_root():
    rs = build_root_system('A', 2)
    assert rs.is_root((1, 1)) and rs.is_root((-1, -1))
    assert not rs.is_root((2, 1))
    with pytest.raises(exceptions.NotARootException):
        rs.root_index((2, 1))


def test_opposition_involution():
    assert build_root_system('E', 6).opposition_involution() == {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    assert build_root_system('D', 5).opposition_involution() == {1: 1, 2: 2, 3: 3, 4: 5, 5: 4}
    assert build_root_system('D', 4).opposition_involution() == {1: 1, 2: 2, 3: 3, 4: 4}
    e7 = build_root_system('E', 7)
    assert e7.opposition_involution() == {i: i for i in range(1, 8)}
    assert e7.opposition_involution([3, 4, 5]) == {3: 5, 4: 4, 5: 3}
    assert e7.opposition_involution([2, 5, 7]) == {2: 2, 5: 5, 7: 7}

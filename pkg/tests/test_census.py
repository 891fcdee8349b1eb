import pytest

from contactgrad.classify.census import classical_summands, load_census, sl2_is_ideal, summand_dim


@pytest.mark.parametrize("summand,dim", [("T1", 1), ("A1", 3), ("B4", 36), ("C3", 21), ("E7", 133), ("F4", 52)])
def test_summand_dim(summand, dim):
    assert summand_dim(summand) == dim


def test_summand_dim_rejects_unknown_types():
    with pytest.raises(ValueError):
        summand_dim("so9")


def test_classical_summands():
    assert classical_summands(["gl(k)", "gl(n - k)"], 1, n=5, k=2) == ["A1", "A2", "T1"]
    assert classical_summands(["so(4)"]) == ["A1", "A1"]
    assert classical_summands(["so(k)", "so(n - k)"], n=9, k=1) == ["D4"]
    assert classical_summands(["sp(n/2)"], n=6) == ["C3"]
    with pytest.raises(ValueError):
        classical_summands(["su(3)"])


def test_exceptional_census_is_consistent():
    census = load_census()
    assert census.check() == []
    assert census.dims("g2") == {6}
    assert census.dims("f4") == {24, 36}
    assert census.dims("e6") == {36, 38, 46, 52}
    assert census.dims("e7") == {63, 69, 79}
    assert census.dims("e8") == {120, 136}
    assert "e9" not in census
    assert set(census.to_dict()) == {"g2", "f4", "e6", "e7", "e8"}


def test_classical_members_of_sl5():
    members = list(load_census().classical_members("sl", 5))
    assert members == [("so_n", {}, ["B2"]),
                       ("s(gl_k+gl_{n-k})", {"k": 1}, ["A3", "T1"]),
                       ("s(gl_k+gl_{n-k})", {"k": 2}, ["A1", "A2", "T1"])]
    assert sl2_is_ideal(members[2][2])
    assert not sl2_is_ideal(members[1][2])


def test_classical_members_filtered_by_subalgebra():
    members = list(load_census().classical_members("so", 8, "gl_{n/2}"))
    assert members == [("gl_{n/2}", {}, ["A3", "T1"])]
    assert list(load_census().classical_members("so", 7, "gl_{n/2}")) == []

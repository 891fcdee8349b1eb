import pytest

from contactgrad import exceptions
from contactgrad.__utils__ import algebra_names, parse_algebra
from contactgrad.core.liealg import FieldFlag


@pytest.mark.parametrize("name,dim", [
    ("g2-split", 14),
    ("a3-split", 15),
    ("g2(C)", 14),
    ("sl2(C)", 3),
    ("sl2(C)-real", 6),
    ("sl(2,R)+sl(2,R)", 6),
    ("su(1, 2)", 8),
    ("su(3)", 8),
    ("su*(4)", 15),
    ("so(2,3)", 10),
    ("so(5)", 10),
    ("so*(6)", 15),
    ("sp(2,R)", 10),
    ("sp(1,1)", 10),
    ("sp(2)", 10),
    ("sl(3,C)", 8),
])
def test_parse_algebra(name, dim):
    assert parse_algebra(name).dim == dim


def test_parse_algebra_field():
    assert parse_algebra("sl2(C)").field_flag == FieldFlag.COMPLEX
    assert parse_algebra("sl2(C)-real").field_flag.is_real
    assert parse_algebra("g2-split").name == "g2(2)"


@pytest.mark.parametrize("name", ["", "sl(2,Q)", "h3", "su*(5)", "e6"])
def test_unknown_algebra(name):
    with pytest.raises(exceptions.UnknownAlgebraException):
        parse_algebra(name)


def test_invalid_parameters():
    with pytest.raises(exceptions.InvalidRealFormException):
        parse_algebra("so(1,1)")


def test_algebra_names_parse():
    for name in algebra_names():
        if name != "e6-split":
            assert parse_algebra(name).dim > 0, name

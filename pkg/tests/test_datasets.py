from fractions import Fraction

import pytest

from contactgrad import exceptions
from contactgrad.core.datasets import evaluate, holds, load_dataset


def test_evaluate():
    assert evaluate("(n-2)**2", n=5) == 9
    assert evaluate("n/2", n=3) == Fraction(3, 2)
    assert evaluate(7) == 7
    assert evaluate("floor(n/2)", n=7) == 3
    with pytest.raises(ValueError):
        evaluate("n + m", n=1)


def test_holds():
    assert holds("(p >= 2) & (q >= 2)", p=2, q=3)
    assert not holds("(p >= 2) & (q >= 2)", p=1, q=3)
    assert holds("Eq(Mod(n, 2), 0) | Eq(n, 3)", n=3)
    assert holds(True)
    assert not holds("False")


@pytest.mark.parametrize("expression", ["__import__('os')", "n.__class__", "import os", "lambda n: n", "[n]",
                                        "open(n)", "n if n else n"])
def test_unsupported_expressions(expression):
    with pytest.raises(ValueError):
        evaluate(expression, n=1)
    with pytest.raises(ValueError):
        holds(expression, n=1)


def test_bundled_datasets_validate():
    for name in ("table_ov", "table1", "table2", "table3", "table4", "table9", "table11", "tables5to8", "satake",
                 "real_form_census", "symmetric_pairs"):
        assert isinstance(load_dataset(name)["version"], int), name


def test_missing_dataset(tmp_path):
    with pytest.raises(exceptions.DatasetValidationException):
        load_dataset("table1", data_dir=tmp_path)


def test_invalid_dataset(tmp_path):
    tmp_path.joinpath("table1.yaml").write_text("version: one\nrows: []\n")
    with pytest.raises(exceptions.DatasetValidationException):
        load_dataset("table1", data_dir=tmp_path)
    tmp_path.joinpath("table4.yaml").write_text("version: 1\n")
    with pytest.raises(exceptions.DatasetValidationException):
        load_dataset("table4", data_dir=tmp_path)


def test_dataset_from_custom_directory(tmp_path):
    tmp_path.joinpath("table9.yaml").write_text("version: 2\nrows:\n  - {algebra: g2, index: '4', dim: 3}\n")
    assert load_dataset("table9", data_dir=tmp_path)["version"] == 2

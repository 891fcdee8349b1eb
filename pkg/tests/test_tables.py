import pytest

from contactgrad.classify.tables import (DEFAULT_TABLES, _classical_representatives, _exceptional_pair_row,
                                         canonical_table_ids, run_tables, verify_jacobi, verify_table1, verify_table2_3,
                                         verify_table4, verify_table9_exclusion, verify_table11, verify_table_ov,
                                         verify_tables5to8)
from contactgrad.core.liealg import FAMILIES
from contactgrad.core.report import DATA_ONLY, MATCH, MISMATCH


def test_table_ov():
    report = verify_table_ov()
    assert report.ok
    assert report.summary == "10/10 match"
    with_extra = verify_table_ov(include_extra=True)
    assert len(with_extra.rows) == 11
    assert with_extra.rows[-1].key == "B2"
    assert with_extra.rows[-1].status == MATCH


def test_table1():
    report = verify_table1()
    assert [row.key for row in report.rows] == ["sl(2,R)+sl(2,R)", "sl(2,C)"]
    assert report.ok and report.count(MATCH) == 2, [row.reason for row in report.rows]


@pytest.mark.slow
def test_table2_and_3():
    report = verify_table2_3()
    assert report.ok, [(row.key, row.reason) for row in report.rows if row.status != MATCH]
    keys = [row.key for row in report.rows]
    assert "Satake-level families" in keys and "real form census" in keys
    assert {row.table_id for row in report.rows} == {"2", "3"}


def test_table4():
    report = verify_table4()
    assert report.ok, [(row.key, row.reason) for row in report.rows if row.status != MATCH]
    assert report.count(MATCH) > 0


def test_table9_exclusion():
    report = verify_table9_exclusion()
    assert report.summary == "11/11 match"
    for row in report.rows:
        assert row.computed["dim"] not in row.computed["census_dims"]


def test_table11():
    report = verify_table11()
    assert len(report.rows) == 9
    assert report.ok, [(row.key, row.reason) for row in report.rows if row.status != MATCH]


def test_tables5to8():
    report = verify_tables5to8()
    assert report.table_id == "5-8"
    assert report.ok, [(row.key, row.reason) for row in report.rows if row.status != MATCH]
    assert report.count(MATCH) > 0
    assert all(row.reason for row in report.rows if row.status == DATA_ONLY)
    assert verify_tables5to8((5,)).table_id == "5"


def test_exceptional_rows_check_the_real_form():
    row = {"id": "5.10", "table": 5, "g": "e6(-14)", "k": "so(10)+so(2)", "form": "e6(-14)"}
    assert _exceptional_pair_row(row, set()).status == DATA_ONLY
    outer = _exceptional_pair_row(dict(row, g="e6(6)", form="e6(6)"), set())
    assert outer.status == MISMATCH
    assert outer.computed["inner"] is False
    assert _exceptional_pair_row(dict(row, g="e6", form="e6(-14)"), set()).status == MISMATCH
    assert _exceptional_pair_row(dict(row, form="e7(-25)"), set()).status == MISMATCH
    assert _exceptional_pair_row(dict(row, table=7, form="e6(6)"), {"e6(6)"}).status == DATA_ONLY


def test_tables5to8_sample_grid():
    report = verify_tables5to8((5,), sample_grid=[])
    assert report.count(MATCH) == 0, "Sampled rows outside the grid are data-only"


def test_noncompact_classical_rows_are_sampled():
    report = verify_tables5to8((6, 7), sample_grid=["6.3", "6.4", "6.5", "6.7", "7.4", "7.5", "7.9"])
    statuses = {row.key.split()[0]: row for row in report.rows}
    for row_id in ("6.3", "6.4", "6.5", "6.7", "7.4", "7.9"):
        assert statuses[row_id].status == MATCH, statuses[row_id].reason
    assert statuses["7.5"].status == DATA_ONLY
    assert "7.7" in statuses["7.5"].reason


def test_canonical_table_ids():
    assert canonical_table_ids(["3", "2", "ov"]) == ["2", "ov"]
    assert canonical_table_ids([9, "11"]) == ["9", "11"]
    assert "3" not in DEFAULT_TABLES
    with pytest.raises(ValueError):
        canonical_table_ids(["10"])


def test_run_tables_keeps_request_order():
    reports = run_tables(["9", "ov", "9"], jobs=1)
    assert [report.table_id for report in reports] == ["9", "ov"]


@pytest.mark.slow
def test_run_tables_in_worker_processes():
    reports = run_tables(["11", "ov", "9"], jobs=2)
    assert [report.table_id for report in reports] == ["11", "ov", "9"]
    assert all(report.ok for report in reports)


def test_jacobi_suite_covers_every_signature():
    members = list(_classical_representatives(15))
    for key, params in [('su', {'p': 0, 'q': 3}), ('su', {'p': 0, 'q': 4}), ('so', {'p': 0, 'q': 5}),
                        ('so', {'p': 1, 'q': 4}), ('sp', {'p': 0, 'q': 2}), ('sp', {'p': 1, 'q': 1})]:
        assert (key, params) in members
    assert ('su', {'p': 3, 'q': 0}) not in members
    assert len([key for key, _ in members if key == 'so']) == 2 + 3 + 3 + 4
    assert all(FAMILIES[key].dim(**params) <= 15 for key, params in members)


@pytest.mark.slow
def test_jacobi_suite():
    report = verify_jacobi()
    assert report.ok
    assert report.count(MATCH) > 0

import pytest

from contactgrad import exceptions
from contactgrad.core.datasets import load_dataset
from contactgrad.core.rootsys import contact_grading_node_set
from contactgrad.core.satake import (census_disagreements, djokovic_consistent, enumerate_contact_real_forms,
                                     enumerate_depth_one_real_forms, family_predicate_holds, load_database,
                                     satake_lookup)


def test_lookup_classical_family_member():
    diagram = satake_lookup("su(2,3)")
    assert (diagram.type_label, diagram.rank, diagram.label) == ('A', 4, "AIII")
    assert diagram.white_nodes == {1, 2, 3, 4}
    assert sorted(diagram.arrows) == [(1, 4), (2, 3)]
    assert diagram.real_rank == 2
    assert satake_lookup("su(3,2)").name == "su(2,3)", "Signatures are looked up up to order"
    assert satake_lookup("su({p},{q})", {"p": 1, "q": 3}).name == "su(1,3)"


def test_lookup_exceptional_and_complex():
    eiv = satake_lookup("e6(-26)")
    assert eiv.label == "EIV"
    assert eiv.colors_bitmask == 0b11110
    assert satake_lookup("EIV").name == "e6(-26)"
    complex_form = satake_lookup("sl(3,C)")
    assert complex_form.complex_form
    assert complex_form.lift({1}) == frozenset({1, 3})
    assert satake_lookup("e7(C)").rank == 7


def test_lookup_unknown():
    with pytest.raises(exceptions.UnknownRealFormException):
        satake_lookup("e9(1)")
    with pytest.raises(exceptions.UnknownRealFormException):
        satake_lookup("su(0,1)")


def test_alias_is_marked():
    assert satake_lookup("so*(8)").alias_of == "so(2,6)"
    assert satake_lookup("so*(10)").alias_of is None


@pytest.mark.parametrize("form,passes", [
    ("e6(-26)", False),
    ("f4(-20)", False),
    ("e6(2)", True),
    ("e6(-14)", True),
    ("e7(-5)", True),
    ("su(1,4)", True),
    ("su*(6)", False),
    ("sp(1,2)", False),
    ("so(2,5)", True),
    ("so(1,6)", False),
    ("sl(3,C)", True),
])
def test_contact_nodes_against_djokovic(form, passes):
    diagram = satake_lookup(form)
    nodes = diagram.lift(contact_grading_node_set(diagram.root_system))
    assert djokovic_consistent(diagram, nodes) == passes


def test_djokovic_rejects_foreign_nodes():
    with pytest.raises(exceptions.InvalidRealFormException):
        djokovic_consistent(satake_lookup("su(1,2)"), {5})


def test_diagrams_are_valid():
    for diagram in load_database().all_diagrams(8, include_complex=True):
        assert diagram.validate() == [], diagram.name


def test_real_form_census():
    assert census_disagreements(8) == {}
    counts = load_database().census(8)
    assert counts["D4"] == 5, "so*(8) is an alias of so(2,6) and is not counted"
    assert counts["E6"] == 5


def test_contact_real_forms_match_table_families():
    labels = {entry.label for entry in enumerate_contact_real_forms()}
    assert labels == {row["label"] for row in load_dataset("table2")["rows"]}
    assert not labels & {"AII", "CII", "EIV", "FII"}
    names = {entry.name for entry in enumerate_contact_real_forms()}
    assert "so*(6)" not in names and "so*(12)" in names


def test_a1_edge_case_on_request():
    assert not any(entry.a1_edge_case for entry in enumerate_contact_real_forms())
    edge = [entry for entry in enumerate_contact_real_forms(max_rank=2, include_edge_cases=True)
            if entry.a1_edge_case]
    assert [entry.name for entry in edge] == ["sl(2,R)"]


def test_depth_one_real_forms():
    pairs = set(enumerate_depth_one_real_forms())
    assert ("sp(3,R)", 3) in pairs
    assert ("so(2,5)", 1) in pairs
    assert ("so(1,6)", 1) in pairs
    assert ("e6(-26)", 1) in pairs
    assert ("e7(-25)", 7) in pairs
    assert ("e6(-14)", 1) not in pairs, "The arrow 1 <-> 6 of e6(-14) leaves the node set"
    assert not [name for name, _ in pairs if name.startswith("e8")], "E8 has no depth-one gradation"


def test_family_predicates():
    predicates = {row["label"]: row["predicate"] for row in load_dataset("table2")["rows"] if "predicate" in row}
    assert family_predicate_holds(satake_lookup("su(1,3)"), predicates)
    assert family_predicate_holds(satake_lookup("so(3,4)"), predicates)
    assert not family_predicate_holds(satake_lookup("so(1,6)"), predicates)
    assert not family_predicate_holds(satake_lookup("su*(6)"), predicates)


def test_ascii_dump():
    text = satake_lookup("f4(-20)").ascii()
    assert text.splitlines()[0].startswith("F4 f4(-20) [FII]")
    assert "1*" in text and "4o" in text
    assert "2=3" in text


@pytest.mark.parametrize("form,inner", [
    ("e6(6)", False), ("e6(2)", True), ("e6(-14)", True), ("e6(-26)", False), ("e6(-78)", True),
    ("e7(-5)", True), ("e7(-25)", True), ("su(2,3)", True), ("sl(3,R)", False), ("su*(4)", False),
])
def test_inner_type(form, inner):
    assert satake_lookup(form).is_inner_type == inner

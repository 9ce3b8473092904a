import json

import pytest

from predred.features import (
    EmptyInput,
    FeatureReport,
    aggregate,
    aggregate_by_label,
    extract_elements,
    key_cutoff,
    read_features_json,
    write_features_json,
    write_summary_csv,
)


def test_elements_of_parsed_program(grammar):
    elems = extract_elements("void f ( ) { }", grammar)
    assert ("type_kw", "void") in elems and ("method_name", "f") in elems
    assert not any(v in "(){}" for _, v in elems)


def test_elements_fallback_for_unparseable(grammar):
    assert extract_elements("void String args", grammar) == {
        ("KEYWORD", "void"), ("IDENT", "String"), ("IDENT", "args"),
    }


def test_key_when_in_every_program(grammar):
    r = aggregate("m", ["void f ( ) { }", "void g ( ) { }"], grammar=grammar)
    assert "void" in r.key and r.candidate["void"] == 2


def test_sparse_below_threshold(grammar):
    r = aggregate("m", ["int a ;", "int b ;", "int c ;"], grammar=grammar)
    assert r.key == ["int"] and r.sparse == ["a", "b", "c"]


@pytest.mark.parametrize("threshold, n, cutoff", [(0.5, 3, 2), (0.5, 2, 1), (0.5, 10, 5), (0.7, 10, 7), (1.0, 4, 4)])
def test_cutoff(threshold, n, cutoff):
    assert key_cutoff(threshold, n) == cutoff


def test_presence_not_frequency(grammar):
    r = aggregate("m", ["a a a a", "b"], threshold=1.0, grammar=grammar)
    assert r.candidate == {"a": 1, "b": 1} and r.key == []


def test_empty_and_bad_threshold(grammar):
    with pytest.raises(EmptyInput):
        aggregate("m", [], grammar=grammar)
    with pytest.raises(ValueError):
        aggregate("m", ["a"], threshold=0, grammar=grammar)


def test_by_label_and_roundtrip(grammar, tmp_path):
    reports = aggregate_by_label(
        [("b", "int x ;"), ("a", "void f ( ) { }"), ("b", "int y ;")], grammar=grammar, model_id="m", reducer_id="r"
    )
    assert [r.label for r in reports] == ["a", "b"]
    write_features_json(reports, tmp_path / "f.json")
    assert read_features_json(tmp_path / "f.json") == reports
    assert json.loads((tmp_path / "f.json").read_text())["reports"][1]["key"] == ["int", "x", "y"]


def test_summary_csv(grammar, tmp_path):
    a = FeatureReport("main", "m", "perses", 2, {"void": 2, "x": 1}, ["void"], ["x"])
    b = FeatureReport("main", "m", "dd-token", 2, {"void": 2}, ["void"], [])
    write_summary_csv([a, b], tmp_path / "s.csv")
    assert (tmp_path / "s.csv").read_text().splitlines() == [
        "method,model,dd-token candidate,dd-token key,perses candidate,perses key",
        "main,m,1,1,2,1",
    ]

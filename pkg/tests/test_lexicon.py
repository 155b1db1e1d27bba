################################################################################
#
# Tests of semantic annotations and the lexicon.
#
# Author(s): Anonymous
################################################################################

import pytest

from src.semantics import (
    FormatError,
    Lexicon,
    Reading,
    Role,
    SemanticAnnotation,
    load_lexicon,
    lookup,
)

################################################################################
# annotations


def test_wikidata_needs_qid():
    with pytest.raises(ValueError):
        SemanticAnnotation("wikidata", "zeta", "Riemann zeta function")

    assert SemanticAnnotation("wikidata", "Q187235", "Riemann zeta function")


@pytest.mark.parametrize("cd, symbol_id", [("", "plus"), ("arith1", "")])
def test_empty_fields(cd, symbol_id):
    with pytest.raises(ValueError):
        SemanticAnnotation(cd, symbol_id, "label")


def test_mathml_element():
    assert SemanticAnnotation("arith1", "plus", "plus").is_mathml_element
    assert not SemanticAnnotation("wikidata", "Q11379", "energy").is_mathml_element


def test_applicable_roles():
    assert Role.function.is_applicable
    assert Role.operator.is_applicable
    assert not Role.identifier.is_applicable
    assert not Role.constant.is_applicable


################################################################################
# the bundled lexicon


def test_zeta_reading(lexicon):
    (reading,) = lookup(r"\zeta", lexicon)

    assert reading.role == Role.function
    assert reading.annotation.cd == "wikidata"
    assert reading.annotation.symbol_id == "Q187235"


def test_energy_is_ambiguous(lexicon):
    readings = lexicon.lookup("E")

    assert [r.annotation.symbol_id for r in readings] == ["Q11379", "Q200125"]
    assert {r.role for r in readings} == {Role.identifier}


def test_unknown_lexeme(lexicon):
    assert lookup("w", lexicon) == ()
    assert "w" not in lexicon


def test_lexicon_size(lexicon):
    assert len(lexicon) == 27


def test_labels_are_lowercase(lexicon):
    labels = {label for label, _, _ in lexicon.labels()}

    assert "energy" in labels
    assert "riemann zeta function" in labels


def test_duplicate_readings_rejected():
    reading = Reading(Role.identifier)

    with pytest.raises(ValueError):
        Lexicon({"x": [reading, reading]})


################################################################################
# lexicon files


def _write(tmp_path, *lines):
    path = tmp_path / "lexicon.tsv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    return path


def test_load_lexicon(tmp_path):
    path = _write(
        tmp_path,
        "# lexeme\trole\tcd\tsymbol_id\tlabel\tdescription",
        "",
        "m\tidentifier\twikidata\tQ11423\tmass",
        "\\sin\tfunction\ttransc1\tsin\tsine\ttrigonometric function",
    )
    lexicon = load_lexicon(path)

    assert len(lexicon) == 2
    assert lexicon.lookup("m")[0].annotation.description is None
    assert lexicon.lookup(r"\sin")[0].annotation.description == "trigonometric function"


@pytest.mark.parametrize(
    "record",
    [
        "m\tidentifier\twikidata\tQ11423",
        "m\tvariable\twikidata\tQ11423\tmass",
        "m\tidentifier\twikidata\tmass\tmass",
    ],
)
def test_malformed_record(tmp_path, record):
    path = _write(tmp_path, "# header", record)

    with pytest.raises(FormatError) as info:
        load_lexicon(path)

    assert info.value.line == 2


def test_duplicate_record(tmp_path):
    record = "m\tidentifier\twikidata\tQ11423\tmass"
    path = _write(tmp_path, record, record)

    with pytest.raises(FormatError) as info:
        load_lexicon(path)

    assert info.value.line == 2

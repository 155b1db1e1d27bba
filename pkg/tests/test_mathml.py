################################################################################
#
# Tests of reading and writing parallel MathML.
#
# Author(s): Anonymous
################################################################################

import pytest

from lxml import etree

from src.bench.converter import InternalConverter
from src.mathml import (
    MATHML_NS,
    InvalidMarkup,
    NotMathML,
    ParallelMarkup,
    XmlError,
    build_parallel_markup,
    emit,
    normalize_presentation,
    parse_generic_xml,
    parse_mathml,
)
from src.tree import ExprTree, from_bracket

NS = {"m": MATHML_NS}

################################################################################
# writing


@pytest.fixture(scope="module")
def riemann_markup(riemann_tex):
    return InternalConverter().convert(riemann_tex)


def test_emit_structure(riemann_markup):
    root = etree.fromstring(emit(riemann_markup).encode("utf-8"))

    assert root.tag == f"{{{MATHML_NS}}}math"
    assert root.xpath("count(m:semantics/m:annotation-xml)", namespaces=NS) == 1

    zeta = root.xpath("//m:csymbol[text()='Q187235']", namespaces=NS)
    assert len(zeta) == 1
    assert zeta[0].get("cd") == "wikidata"
    assert zeta[0].get("name") == "Riemann zeta function"


def test_cross_references_point_both_ways(riemann_markup):
    root = etree.fromstring(emit(riemann_markup).encode("utf-8"))
    by_id = {e.get("id"): e for e in root.iter() if e.get("id") is not None}

    xrefs = [(e.get("id"), e.get("xref")) for e in by_id.values() if e.get("xref")]
    assert xrefs

    for own, other in xrefs:
        assert by_id[other].get("xref") == own


def test_presentation_only():
    markup = InternalConverter().convert("a+b")
    presentation_only = build_parallel_markup(markup.presentation)

    assert "annotation-xml" not in emit(presentation_only)
    assert "semantics" not in emit(presentation_only)


def test_non_mathml_attributes_are_prefixed(registry):
    markup = InternalConverter(registry=registry).convert(r"\commutator{a}{b}")

    assert 'data-macro="commutator"' in emit(markup)


################################################################################
# reading


def test_emit_parse_emit(riemann_markup):
    text = emit(riemann_markup)
    markup = parse_mathml(text)

    assert emit(markup) == text
    assert markup.xrefs == riemann_markup.xrefs
    assert markup.content.same_shape(riemann_markup.content)


def test_emit_parse_emit_gold(gold):
    for entry in gold:
        text = emit(parse_mathml(entry.gold_mathml))

        assert emit(parse_mathml(text)) == text, entry.id


def test_gold_content_is_head_as_node(gold):
    riemann = gold[0].markup.content

    assert riemann.label == "implies"
    assert riemann.children[0].children[0].label == "Q187235"


def test_empty_math():
    markup = parse_mathml(f"<math xmlns='{MATHML_NS}'/>")

    assert markup.is_empty
    assert markup.content is None


def test_malformed_xml():
    with pytest.raises(XmlError):
        parse_mathml("<math><mi>x</math>")


def test_not_mathml():
    with pytest.raises(NotMathML):
        parse_mathml("<foo/>")


def test_dangling_cross_reference():
    xml = (
        f"<math xmlns='{MATHML_NS}'><semantics><mi id='1' xref='9'>x</mi>"
        "<annotation-xml encoding='MathML-Content'><ci id='2'>x</ci>"
        "</annotation-xml></semantics></math>"
    )

    with pytest.raises(InvalidMarkup):
        parse_mathml(xml)

    assert parse_mathml(xml, strict=False).xrefs == {}


def test_conflicting_cross_references():
    xml = (
        f"<math xmlns='{MATHML_NS}'><semantics><mi id='1' xref='2'>x</mi>"
        "<annotation-xml encoding='MathML-Content'><apply><plus/>"
        "<ci id='2' xref='1'>x</ci><ci id='3' xref='1'>x</ci></apply>"
        "</annotation-xml></semantics></math>"
    )

    with pytest.raises(InvalidMarkup, match="refers to both"):
        parse_mathml(xml)

    assert parse_mathml(xml, strict=False).xrefs == {"1": "2"}


def test_generic_xml():
    tree = parse_generic_xml("<sentence><word>E</word><word>equals</word></sentence>")

    assert tree.to_bracket() == "{sentence{word{E}}{word{equals}}}"


################################################################################
# markup invariants


def test_duplicate_ids():
    presentation = ExprTree.node(
        "Row", ExprTree.leaf("a", id="1"), ExprTree.leaf("b", id="1")
    )

    with pytest.raises(InvalidMarkup):
        ParallelMarkup(presentation)


def test_xref_lookup():
    presentation = ExprTree.leaf("x", element="mi", id="1")
    content = ExprTree.leaf("x", kind="ci", id="2")
    markup = ParallelMarkup(presentation, content, {"1": "2"})

    assert markup.content_of("1") == "2"
    assert markup.presentation_of("2") == "1"
    assert markup.content_of("2") is None


################################################################################
# normalization


def test_mfenced_is_dissolved():
    fenced = parse_mathml(
        f"<math xmlns='{MATHML_NS}'><mfenced><mi>a</mi><mi>b</mi></mfenced></math>"
    ).presentation

    normal = normalize_presentation(fenced)

    assert [c.label for c in normal.children] == ["(", "a", ",", "b", ")"]
    assert normalize_presentation(normal) == normal


def test_single_rows_collapse():
    tree = from_bracket("{Row{Row{x}}}")

    assert normalize_presentation(tree).to_bracket() == "{x}"

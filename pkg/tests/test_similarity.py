################################################################################
#
# Tests of the similarity measures and the symbol taxonomy.
#
# Author(s): Anonymous
################################################################################

import pytest

from src.evaluation import (
    EmptyQuery,
    Taxonomy,
    data_type_distance,
    default_taxonomy,
    load_taxonomy,
    match_depth,
    match_depth_score,
    mean_taxonomic_distance,
    query_coverage,
    taxonomic_distance,
)
from src.evaluation.taxonomy import symbol_of, type_of
from src.tree import ExprTree, from_bracket

CHAIN = {"root": {"a": {"b": {"c": {"x": ["s1"], "y": ["s2"]}}}}}

################################################################################
# match depth


def test_match_depth():
    tree = from_bracket("{a{b{c{d}}}}")
    b = tree.children[0]
    d = b.children[0].children[0]

    assert match_depth(tree, tree) == 1
    assert match_depth(b, tree) == 0.5
    assert match_depth(d, tree) == 0.125


def test_match_depth_by_identity():
    tree = from_bracket("{a{b}}")

    with pytest.raises(ValueError):
        match_depth(from_bracket("{b}"), tree)


def test_match_depth_score():
    tree = from_bracket("{eq{x}{plus{y}{1}}}")

    assert match_depth_score(tree, tree.copy()) == pytest.approx(1.0)

    renamed = from_bracket("{eq{x}{plus{y}{2}}}")
    assert 0 < match_depth_score(tree, renamed) < 1


################################################################################
# query coverage


def test_query_coverage():
    query = from_bracket("{plus{x}{x}{y}}")
    candidate = from_bracket("{times{x}{y}{z}}")

    assert query_coverage(query, candidate) == pytest.approx(2 / 3)
    assert query_coverage(query, query) == 1


def test_layout_is_not_a_token():
    with pytest.raises(EmptyQuery):
        query_coverage(ExprTree("Row"), from_bracket("{x}"))


################################################################################
# taxonomies


def test_chain_taxonomy():
    tax = Taxonomy.from_mapping(CHAIN)

    assert tax.height == 4
    assert len(tax) == 6
    assert tax.distance("s1", "s2") == 0.5
    assert tax.distance("s1", "s1") == 0
    assert tax.distance("s1", "unknown") == 1


@pytest.mark.parametrize(
    "mapping",
    [
        {"a": ["x"], "b": ["y"]},
        {"root": {"a": ["x"], "b": ["x"]}},
        {"root": {"a": {"a": ["x"]}}},
    ],
)
def test_malformed_taxonomy(mapping):
    with pytest.raises(ValueError):
        Taxonomy.from_mapping(mapping)


def test_load_taxonomy(tmp_path):
    path = tmp_path / "taxonomy.yaml"
    path.write_text(
        "symbols:\n  root:\n    left: [p]\n    right:\n      symbols: [q]\n"
        "      deeper: [r]\n",
        encoding="utf-8",
    )
    tax = load_taxonomy(path)

    assert tax.distance("q", "r") == 0.5
    assert tax.distance("p", "q") == 1

    with pytest.raises(ValueError):
        load_taxonomy(path, "types")


def test_default_taxonomy():
    tax = default_taxonomy()

    assert tax.distance("plus", "minus") == 0
    assert tax.distance("plus", "times") == 0.5
    assert tax.distance("plus", "eq") == 1
    assert tax.distance("eq", "=") == 0


################################################################################
# node classification


def test_symbol_of():
    assert symbol_of(ExprTree.leaf("x", kind="ci")) == "ci"
    assert symbol_of(ExprTree.leaf("x", element="mi")) == "ci"
    assert symbol_of(ExprTree.leaf("2", element="mn")) == "cn"
    assert symbol_of(ExprTree.leaf("plus", kind="csymbol")) == "plus"
    assert symbol_of(ExprTree.leaf("+", element="mo")) == "+"
    assert symbol_of(ExprTree.leaf("plus")) == "plus"


@pytest.mark.parametrize(
    "node, expected",
    [
        (ExprTree.leaf("2", kind="cn"), "integer"),
        (ExprTree.leaf("2.5", kind="cn"), "real"),
        (ExprTree.leaf("x", kind="ci"), "identifier"),
        (ExprTree.node("f", ExprTree.leaf("x"), kind="ci"), "function"),
        (from_bracket("{eq{x}{y}}"), "relation"),
        (from_bracket("{sin{x}}"), "function"),
        (from_bracket("{pi}"), "real"),
        (from_bracket("{plus{x}{y}}"), "operator"),
    ],
)
def test_type_of(node, expected):
    assert type_of(node) == expected


def test_type_of_unknown_leaf():
    assert type_of(from_bracket("{banana}")) is None


################################################################################
# taxonomic distances between trees


def test_taxonomic_distance():
    tax = Taxonomy.from_mapping(CHAIN)

    assert taxonomic_distance(ExprTree("s1"), ExprTree("s2"), tax) == 0.5
    assert mean_taxonomic_distance(ExprTree("s1"), ExprTree("s2"), tax) == 0.5
    assert mean_taxonomic_distance(ExprTree("s1"), ExprTree("z"), tax) == 1


def test_identical_trees_are_taxonomically_equal():
    tree = from_bracket("{eq{plus{pi}{pi}}{times{pi}{infinity}}}")

    assert mean_taxonomic_distance(tree, tree.copy()) == 0


def test_data_type_distance():
    two = ExprTree.leaf("2", kind="cn")
    three = ExprTree.leaf("3", kind="cn")
    x = ExprTree.leaf("x", kind="ci")

    assert data_type_distance(two, three) == 0
    assert data_type_distance(two, x) == 1
    assert data_type_distance(ExprTree("banana"), two) == 1

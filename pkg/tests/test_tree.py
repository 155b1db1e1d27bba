################################################################################
#
# Tests of the expression tree structure.
#
# Author(s): Anonymous
################################################################################

import pytest

from src.tree import ExprTree, from_bracket, has_ids, number_nodes

################################################################################
# accounting


def test_token_count_skips_rows():
    tree = ExprTree.node("Row", ExprTree.leaf("a"), ExprTree.leaf("b"))

    assert tree.size() == 3
    assert tree.token_count() == 2
    assert tree.depth() == 1


def test_depth_of_single_token():
    assert ExprTree.leaf("x").depth() == 1


def test_leaves_in_reading_order():
    tree = from_bracket("{plus{x}{times{y}{z}}}")

    assert [leaf.label for leaf in tree.leaves()] == ["x", "y", "z"]


################################################################################
# bracket notation


def test_bracket_notation():
    text = "{eq{a}{plus{b}{c}}}"
    tree = from_bracket(text)

    assert tree.label == "eq"
    assert tree.to_bracket() == text


def test_bracket_escapes_braces():
    tree = ExprTree.node("set", ExprTree.leaf("{"))

    assert from_bracket(tree.to_bracket()).same_shape(tree)


@pytest.mark.parametrize("text", ["{a", "a}", "{a}{b}", ""])
def test_malformed_bracket(text):
    with pytest.raises(ValueError):
        from_bracket(text)


################################################################################
# structure


def test_same_shape_ignores_attributes():
    a = ExprTree.leaf("x", element="mi")
    b = ExprTree.leaf("x", element="mn")

    assert a.same_shape(b)
    assert a != b
    assert not a.same_shape(ExprTree.leaf("y"))


def test_without_attrs():
    tree = ExprTree.node("f", ExprTree.leaf("x", id="2", kind="ci"), id="1")

    assert tree.without_attrs("id").children[0].attrs == {"kind": "ci"}
    assert tree.without_attrs().attrs == {}
    assert tree.attrs == {"id": "1"}


def test_number_nodes_skips_rows():
    tree = ExprTree.node("Row", ExprTree.leaf("a"), ExprTree.leaf("b"))
    numbered, next_id = number_nodes(tree, start=5)

    assert next_id == 7
    assert "id" not in numbered.attrs
    assert [c.attrs["id"] for c in numbered.children] == ["5", "6"]
    assert has_ids(numbered)
    assert not has_ids(tree)
    assert numbered.find("6").label == "b"
    assert numbered.find("7") is None

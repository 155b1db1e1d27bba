################################################################################
#
# The script refinements of content trees.
#
# Author(s): Anonymous
################################################################################

from src.content.nodes import AMBIGUOUS_CD, ci, op
from src.tree import ExprTree

################################################################################
# helpers


def _is_notation(node: ExprTree, symbol: str) -> bool:
    return (
        node.label == symbol
        and node.attrs.get("kind") == "csymbol"
        and node.attrs.get("cd") == AMBIGUOUS_CD
    )


def _bottom_up(tree: ExprTree, rewrite) -> ExprTree:
    children = [_bottom_up(c, rewrite) for c in tree.children]
    return rewrite(tree.replace(children=children))


################################################################################
# superscripts


def apply_power_rule(tree: ExprTree) -> ExprTree:
    """
    Read superscripts as powers unless they were marked as Einstein indices.
    """

    def rewrite(node: ExprTree) -> ExprTree:
        if not _is_notation(node, "superscript") or node.attrs.get("einstein"):
            return node

        return op("power", node.children, node.attrs.get("src"))

    return _bottom_up(tree, rewrite)


################################################################################
# subscripts


def apply_subscript_rule(tree: ExprTree) -> ExprTree:
    """
    Read math-mode subscripts as parameters of their base, so `p_i` becomes `p`
    with child `i`. A text-mode subscript fuses with its base into one
    identifier, `x_\\text{max}` becomes `x_max`.
    """

    def rewrite(node: ExprTree) -> ExprTree:
        if not _is_notation(node, "subscript"):
            return node

        base, *indices = node.children

        if (
            base.is_leaf
            and indices
            and all(i.is_leaf and i.attrs.get("text") for i in indices)
        ):
            name = "_".join([base.label, *(i.label for i in indices)])
            return ci(name, base.attrs.get("src"))

        if base.is_leaf:
            return base.replace(children=indices)

        return ExprTree("apply", [base, *indices], {"kind": "apply"})

    return _bottom_up(tree, rewrite)

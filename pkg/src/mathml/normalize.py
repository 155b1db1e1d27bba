################################################################################
#
# Remove the degrees of freedom presentation markup leaves to its authors, so
# that trees of different converters can be compared.
#
# Author(s): Anonymous
################################################################################

from typing import List

from src.tree import ExprTree

################################################################################
# normalization


def normalize_presentation(tree: ExprTree) -> ExprTree:
    """
    Dissolve fenced groups into explicit fence operators and collapse rows
    holding a single node. Normalizing twice changes nothing.
    """
    children = [normalize_presentation(c) for c in tree.children]

    if tree.label == "Fenced":
        return _row(_expand_fenced(tree, children))

    if tree.is_layout and len(children) == 1 and "macro" not in tree.attrs:
        return children[0]

    return tree.replace(children=children)


def _row(nodes: List[ExprTree]) -> ExprTree:
    if len(nodes) == 1:
        return nodes[0]

    return ExprTree("Row", nodes, {"element": "mrow"})


def _fence(text: str) -> ExprTree:
    return ExprTree.leaf(text, element="mo")


def _expand_fenced(fenced: ExprTree, children: List[ExprTree]) -> List[ExprTree]:
    open_fence = fenced.attrs.get("open", "(")
    close_fence = fenced.attrs.get("close", ")")
    separators = "".join(fenced.attrs.get("separators", ",").split())

    nodes = [_fence(open_fence)] if open_fence else []

    for i, child in enumerate(children):
        if i > 0 and separators:
            # the last separator repeats
            nodes.append(_fence(separators[min(i - 1, len(separators) - 1)]))

        nodes.append(child)

    if close_fence:
        nodes.append(_fence(close_fence))

    return nodes


################################################################################
#
# Encoding rules for notation with a dedicated content symbol: the special
# superscripts for degree, adjoint and transformation, case distinctions,
# equation labels and lists of equations.
#
# Author(s): Anonymous
################################################################################

from typing import Optional

from src.content.nodes import AMBIGUOUS_CD, annotated, csymbol
from src.latex.macros import MacroRegistry, default_registry
from src.tree import ExprTree

################################################################################
# tables

# superscript glyph -> macro whose annotation replaces the superscript
SPECIAL_SUPERSCRIPTS = {
    "∘": "degree",
    "†": "adjoint",
    "′": "transformation",
}

RELATION_HEADS = frozenset(
    {"eq", "neq", "lt", "gt", "leq", "geq", "approx", "equivalent", "in", "subset"}
)

PIECE_CD = "piece1"


def _is_notation(node: ExprTree, symbol: str) -> bool:
    return node.label == symbol and node.attrs.get("cd") == AMBIGUOUS_CD


def is_relation(node: ExprTree) -> bool:
    if node.attrs.get("kind") == "op":
        return node.label in RELATION_HEADS

    # relations without a MathML operator are named after their glyph
    return node.attrs.get("cd") == AMBIGUOUS_CD and node.attrs.get("name") == "relation"


################################################################################
# entrypoint


def apply_special_heads(
    tree: ExprTree, registry: Optional[MacroRegistry] = None
) -> ExprTree:
    registry = registry if registry is not None else default_registry()
    annotations = registry.annotations()

    def rewrite(node: ExprTree) -> ExprTree:
        node = node.replace(children=[rewrite(c) for c in node.children])
        src = node.attrs.get("src")

        if _is_notation(node, "tag"):
            return node.children[0]

        if _is_notation(node, "cases"):
            pieces = [_piece(c) for c in node.children]
            return csymbol("piecewise", PIECE_CD, pieces, src)

        if _is_notation(node, "superscript"):
            base, sup = node.children

            name = SPECIAL_SUPERSCRIPTS.get(sup.label) if sup.is_leaf else None
            annotation = annotations.get(name) if name is not None else None

            if annotation is not None and sup.attrs.get("kind") == "ci":
                return annotated(annotation, [base], src)

        return node

    tree = rewrite(tree)

    # of a list of equations only the first one is kept
    if tree.label == "list" and tree.attrs.get("cd") == "list1":
        relations = [c for c in tree.children if is_relation(c)]

        if relations:
            return tree.children[0]

    return tree


def _piece(case: ExprTree) -> ExprTree:
    if len(case.children) == 1:
        return csymbol("otherwise", PIECE_CD, case.children)

    return csymbol("piece", PIECE_CD, case.children)

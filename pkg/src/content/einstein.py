################################################################################
#
# Discover Einstein summation: an index letter which is raised exactly once and
# lowered exactly once within one multiplicative term.
#
# Author(s): Anonymous
################################################################################

from collections import defaultdict
from typing import Dict, List, Set

from src.latex.symbols import RELATIONS
from src.tree import ExprTree, has_ids, number_nodes

################################################################################
# term structure

# operators which separate terms
TERM_SEPARATORS = frozenset(
    {"+", "−", "±", "∓", ",", "=", "<", ">", "∨", "∧", *RELATIONS.values()}
)

_Occurrences = Dict[str, List[str]]


def detect_einstein(tree: ExprTree) -> Set[str]:
    """
    Return the ids of the index leaves which form Einstein pairs. A tree
    without ids is numbered the way `number_nodes` numbers it.
    """
    if not has_ids(tree):
        tree, _ = number_nodes(tree)

    found: Set[str] = set()
    _scan(tree.children if tree.is_layout else [tree], found)

    return found


def _is_separator(node: ExprTree) -> bool:
    return (
        node.is_leaf
        and node.attrs.get("element") == "mo"
        and node.label in TERM_SEPARATORS
    )


def _split_terms(nodes: List[ExprTree]) -> List[List[ExprTree]]:
    terms: List[List[ExprTree]] = [[]]

    for node in nodes:
        if _is_separator(node):
            terms.append([])
        else:
            terms[-1].append(node)

    return [t for t in terms if t]


def _scan(nodes: List[ExprTree], found: Set[str]):
    for term in _split_terms(nodes):
        uppers: _Occurrences = defaultdict(list)
        lowers: _Occurrences = defaultdict(list)

        for node in term:
            _collect(node, uppers, lowers, found)

        for letter, upper_ids in uppers.items():
            lower_ids = lowers.get(letter, [])

            if len(upper_ids) == 1 and len(lower_ids) == 1:
                found.update(upper_ids)
                found.update(lower_ids)


def _index_leaves(node: ExprTree) -> List[ExprTree]:
    def is_letter(n: ExprTree) -> bool:
        return (
            n.is_leaf
            and n.attrs.get("element") == "mi"
            and len(n.label) == 1
            and n.label.isalpha()
        )

    if is_letter(node):
        return [node]
    if node.is_layout and node.children and all(is_letter(c) for c in node.children):
        return list(node.children)

    return []


def _collect(
    node: ExprTree, uppers: _Occurrences, lowers: _Occurrences, found: Set[str]
):
    if node.is_layout and any(_is_separator(c) for c in node.children):
        # a nested sum forms terms of its own
        _scan(node.children, found)
        return

    if node.label == "Script":
        element = node.attrs.get("element")
        base = node.children[0]

        if element in ("msub", "msubsup"):
            for leaf in _index_leaves(node.children[1]):
                lowers[leaf.label].append(leaf.attrs["id"])
        if element in ("msup", "msubsup"):
            for leaf in _index_leaves(node.children[-1]):
                uppers[leaf.label].append(leaf.attrs["id"])

        _collect(base, uppers, lowers, found)
        return

    for child in node.children:
        _collect(child, uppers, lowers, found)

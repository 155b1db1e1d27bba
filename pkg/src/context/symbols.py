################################################################################
#
# Find the tokens of a formula which are worth annotating: identifiers, whose
# meaning comes from the surrounding text, and symbols, every simple token
# which is not a plain identifier.
#
# Author(s): Anonymous
################################################################################

from typing import FrozenSet, List, Optional

from src.content.invisible import CLOSING_FENCES, OPENING_FENCES, is_invisible
from src.content.roles import leaf_lexeme
from src.latex.macros import MacroRegistry, default_registry
from src.latex.symbols import FUNCTION_NAMES
from src.tree import ExprTree

################################################################################
# token classes

# punctuation which never carries meaning of its own
_PUNCTUATION = OPENING_FENCES | CLOSING_FENCES | frozenset({",", ";", "|", "‖"})

_FUNCTION_NAMES = frozenset(FUNCTION_NAMES)


def identifiers(
    formula: ExprTree, registry: Optional[MacroRegistry] = None
) -> List[str]:
    """
    The lexemes of the identifier tokens of `formula` in reading order.
    """
    registry = registry if registry is not None else default_registry()
    found: List[str] = []

    for leaf in formula.leaves():
        if leaf.attrs.get("element") != "mi" or leaf.label in _FUNCTION_NAMES:
            continue

        lexeme = leaf_lexeme(leaf, registry)

        if lexeme not in found:
            found.append(lexeme)

    return found


def identify_symbols(
    formula: ExprTree, registry: Optional[MacroRegistry] = None
) -> FrozenSet[str]:
    """
    Symbol candidates of `formula`: operators, tokens written with a command
    such as `\\zeta` and the heads of semantic macros.
    """
    registry = registry if registry is not None else default_registry()
    symbols = set()

    for node in formula.preorder():
        if "macro" in node.attrs:
            symbols.add("\\" + node.attrs["macro"])

        if not node.is_leaf or node.is_layout:
            continue

        element = node.attrs.get("element")
        lexeme = leaf_lexeme(node, registry)

        if element == "mo":
            if node.label not in _PUNCTUATION and not is_invisible(node):
                symbols.add(lexeme)

        elif element == "mi" and lexeme.startswith("\\"):
            symbols.add(lexeme)

    return frozenset(symbols)

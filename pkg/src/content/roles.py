################################################################################
#
# Resolve the role and the annotation of presentation tokens from an
# annotation map. The map is keyed by TeX lexeme (`\zeta`, `f`), so leaves are
# translated back to the command they were written with.
#
# Author(s): Anonymous
################################################################################

from typing import Dict, Mapping, Optional, Sequence

from src.content.errors import AmbiguityUnresolved
from src.latex.macros import MacroRegistry
from src.latex.symbols import FUNCTION_NAMES
from src.semantics.annotation import Reading, Role
from src.semantics.lexicon import Lexicon
from src.tree import ExprTree

################################################################################
# the annotation map

Annotations = Mapping[str, Sequence[Reading]]

# operators which take the following operand without explicit parentheses
BIG_OPERATORS = frozenset({"∑", "∏", "∫", "∮"})

_FUNCTION_NAMES = frozenset(FUNCTION_NAMES)


def leaf_lexeme(leaf: ExprTree, registry: MacroRegistry) -> str:
    label = leaf.label

    if len(label) == 1 and label.isascii():
        return label

    command = registry.reverse_symbols().get(label)

    return command if command is not None else label


def reading_of(
    leaf: ExprTree, annotations: Annotations, registry: MacroRegistry
) -> Optional[Reading]:
    """
    The reading of a token: the first entry of its annotation map record, or
    an intrinsic reading for upright function names and big operators.
    """
    readings = annotations.get(leaf_lexeme(leaf, registry), ())

    if readings:
        return readings[0]

    element = leaf.attrs.get("element")

    if element == "mi" and leaf.label in _FUNCTION_NAMES:
        return Reading(Role.function)
    if element == "mo" and leaf.label in BIG_OPERATORS:
        return Reading(Role.operator)

    return None


def leading_role(
    node: ExprTree, annotations: Annotations, registry: MacroRegistry
) -> Optional[Role]:
    """
    The role of the token which decides how `node` combines with a following
    operand. A script inherits the role of its base, so `\\sin^2 x` applies.
    """
    if "macro" in node.attrs or node.label == "Macro":
        return None

    if node.is_leaf and not node.is_layout:
        reading = reading_of(node, annotations, registry)
        return reading.role if reading is not None else None

    if node.label == "Script":
        return leading_role(node.children[0], annotations, registry)

    return None


def check_unambiguous(
    tree: ExprTree, annotations: Annotations, registry: MacroRegistry
):
    for leaf in tree.leaves():
        lexeme = leaf_lexeme(leaf, registry)
        roles = {r.role for r in annotations.get(lexeme, ())}

        if len(roles) > 1:
            raise AmbiguityUnresolved(lexeme, roles)


def is_plain_identifier(leaf: ExprTree, registry: MacroRegistry) -> bool:
    """
    An identifier written as a plain letter, such as `c` or `F`. Its meaning
    comes from the surrounding text only, never from the lexicon alone.
    """
    return (
        leaf.attrs.get("element") == "mi"
        and leaf.label not in _FUNCTION_NAMES
        and not leaf_lexeme(leaf, registry).startswith("\\")
    )


def lexicon_annotations(
    tree: ExprTree, lexicon: Lexicon, registry: MacroRegistry
) -> Dict[str, Sequence[Reading]]:
    """
    The context-free annotation map of the symbols of `tree`. Plain
    identifiers are left out and read as `ci`.
    """
    annotations = {}

    for leaf in tree.leaves():
        if is_plain_identifier(leaf, registry):
            continue

        lexeme = leaf_lexeme(leaf, registry)
        readings = lexicon.lookup(lexeme)

        if readings:
            annotations[lexeme] = readings

    return annotations

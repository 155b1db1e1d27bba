################################################################################
#
# Make the operators which TeX leaves implicit explicit, the way MathML does:
# between two adjacent operands either an invisible times (U+2062) or a
# function application (U+2061) is inserted. Matching fences are grouped into
# Fenced nodes and intact macro expansions are replaced by Macro nodes whose
# children are the macro arguments.
#
# Author(s): Anonymous
################################################################################

from typing import List, Optional, Tuple

from src.content.roles import BIG_OPERATORS, Annotations, leading_role
from src.latex.macros import MacroRegistry, default_registry
from src.latex.parser import macro_bindings
from src.tree import ExprTree

################################################################################
# invisible operators

INVISIBLE_TIMES = "\u2062"
FUNCTION_APPLICATION = "\u2061"

INVISIBLE_OPERATORS = frozenset({INVISIBLE_TIMES, FUNCTION_APPLICATION})

# operator glyphs which stand in operand position
OPERAND_OPERATORS = BIG_OPERATORS | frozenset({"∂", "∇", "…", "⋯", "′"})

################################################################################
# fences

OPENING_FENCES = frozenset({"(", "[", "{", "⟨", "⌊", "⌈"})
CLOSING_FENCES = frozenset({")", "]", "}", "⟩", "⌋", "⌉"})

# fences which open and close with the same glyph
TOGGLE_FENCES = frozenset({"|", "‖"})

_PAIRS = {"{": "}", "⟨": "⟩", "⌊": "⌋", "⌈": "⌉"}


def closes(open_fence: str, close_fence: str) -> bool:
    if open_fence in TOGGLE_FENCES:
        return open_fence == close_fence
    if open_fence in "([":
        # half-open intervals mix the two kinds
        return close_fence in ")]"

    return _PAIRS.get(open_fence) == close_fence


def is_mo(node: ExprTree, *labels: str) -> bool:
    if not node.is_leaf or node.attrs.get("element") != "mo":
        return False

    return not labels or node.label in labels


def is_label(node: ExprTree) -> bool:
    return node.is_leaf and node.attrs.get("role") == "label"


def is_invisible(node: ExprTree) -> bool:
    return is_mo(node) and node.label in INVISIBLE_OPERATORS


def is_operand(node: ExprTree) -> bool:
    if is_label(node):
        return False
    if is_mo(node):
        return node.label in OPERAND_OPERATORS

    return True


################################################################################
# entrypoint


def disambiguate_invisible(
    tree: ExprTree,
    annotations: Annotations,
    registry: Optional[MacroRegistry] = None,
    apply_functions: bool = True,
) -> ExprTree:
    """
    Return a copy of the presentation `tree` with grouped fences and explicit
    invisible operators. Application is chosen iff the left operand reads as a
    function or an operator and `apply_functions` is set.
    """
    registry = registry if registry is not None else default_registry()

    return _Disambiguator(annotations, registry, apply_functions).visit(tree)


class _Disambiguator:
    def __init__(
        self, annotations: Annotations, registry: MacroRegistry, apply_functions: bool
    ):
        self.annotations = annotations
        self.registry = registry
        self.apply_functions = apply_functions

    def visit(self, node: ExprTree) -> ExprTree:
        if "macro" in node.attrs:
            bindings = macro_bindings(node, self.registry)

            if bindings is not None:
                return self.macro(node, bindings)

        if node.is_layout:
            return node.replace(children=self.sequence(node.children))

        if node.is_leaf:
            return node.copy()

        return node.replace(children=[self.visit(c) for c in node.children])

    def macro(self, node: ExprTree, bindings) -> ExprTree:
        macro = self.registry.by_bare_name(node.attrs["macro"])
        empty = ExprTree("Row", [], {"element": "mrow"})

        args = [
            self.visit(bindings.get(slot, empty))
            for slot in range(1, macro.total_args + 1)
        ]

        attrs = {"macro": node.attrs["macro"]}
        if "id" in node.attrs:
            attrs["id"] = node.attrs["id"]

        return ExprTree("Macro", args, attrs)

    ############################################################################
    # sequences

    def sequence(self, children: List[ExprTree]) -> List[ExprTree]:
        items = group_fences([self.visit(c) for c in children])
        return self.insert(items)

    def insert(self, items: List[ExprTree]) -> List[ExprTree]:
        result: List[ExprTree] = []

        for item in items:
            if item.label == "Fenced":
                item = item.replace(children=self.insert(item.children))

            elif item.label == "Script" and item.children[0].label == "Fenced":
                base = item.children[0]
                base = base.replace(children=self.insert(base.children))
                item = item.replace(children=[base, *item.children[1:]])

            if result and is_operand(result[-1]) and is_operand(item):
                result.append(self.invisible_operator(result[-1]))

            result.append(item)

        return result

    def invisible_operator(self, left: ExprTree) -> ExprTree:
        role = leading_role(left, self.annotations, self.registry)

        if self.apply_functions and role is not None and role.is_applicable:
            return ExprTree.leaf(FUNCTION_APPLICATION, element="mo")

        return ExprTree.leaf(INVISIBLE_TIMES, element="mo")


################################################################################
# grouping of fences

_Frame = Tuple[ExprTree, List[ExprTree]]


def _fenced(open_leaf: ExprTree, close_leaf: ExprTree, inner: List[ExprTree]):
    attrs = {"open": open_leaf.label, "close": close_leaf.label}

    if "id" in open_leaf.attrs:
        attrs["src"] = open_leaf.attrs["id"]

    return ExprTree("Fenced", inner, attrs)


def group_fences(items: List[ExprTree]) -> List[ExprTree]:
    """
    Group matching fence leaves with the items between them. Unmatched fences
    stay plain leaves. A closing fence carrying scripts, as in `(x)^2`, closes
    its group and the scripts move to the group.
    """
    out: List[ExprTree] = []
    stack: List[_Frame] = []

    def current() -> List[ExprTree]:
        return stack[-1][1] if stack else out

    def dissolve_top():
        open_leaf, inner = stack.pop()
        current().extend([open_leaf, *inner])

    def try_close(close_leaf: ExprTree) -> Optional[ExprTree]:
        while stack and stack[-1][0].label in TOGGLE_FENCES:
            if closes(stack[-1][0].label, close_leaf.label):
                break
            dissolve_top()

        if stack and closes(stack[-1][0].label, close_leaf.label):
            open_leaf, inner = stack.pop()
            return _fenced(open_leaf, close_leaf, inner)

        return None

    for item in items:
        fence = item

        if item.label == "Script" and is_mo(item.children[0]):
            fence = item.children[0]

        if not is_mo(fence):
            current().append(item)
            continue

        label = fence.label
        toggle_closes = (
            label in TOGGLE_FENCES and stack and stack[-1][0].label == label
        )

        if label in CLOSING_FENCES or toggle_closes:
            group = try_close(fence)

            if group is None:
                current().append(item)
            elif fence is item:
                current().append(group)
            else:
                current().append(item.replace(children=[group, *item.children[1:]]))

        elif fence is item and (label in OPENING_FENCES or label in TOGGLE_FENCES):
            stack.append((item, []))

        else:
            current().append(item)

    while stack:
        dissolve_top()

    return out

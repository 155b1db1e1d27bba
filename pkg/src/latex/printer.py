################################################################################
#
# Print a presentation tree back to TeX. The output is canonical rather than
# faithful: spacing is normalized, scripts are written subscript first and
# macro expansions are folded back into their macro call. Parsing the printed
# TeX yields the tree that was printed.
#
# Author(s): Anonymous
################################################################################

from typing import Dict, List, Optional

from src.latex.macros import MacroDef, MacroRegistry, default_registry
from src.latex.parser import SLOT_ELEMENT, macro_bindings
from src.latex.symbols import ASCII_GLYPHS, VARIANTS
from src.tree import ExprTree

################################################################################
# printing tables

# ASCII characters the tokenizer turns into the same operator leaf
_ASCII_TOKENS = frozenset("+/,;:!|@&.?=<>()[]")

_GLYPH_TO_ASCII = {
    glyph: char for char, glyph in ASCII_GLYPHS.items() if char != "'"
}

_VARIANT_COMMANDS: Dict[str, str] = {}
for _command, _variant in VARIANTS.items():
    _VARIANT_COMMANDS.setdefault(_variant, _command)


################################################################################
# entrypoint


def to_tex(tree: ExprTree, registry: Optional[MacroRegistry] = None) -> str:
    registry = registry if registry is not None else default_registry()

    return _Printer(registry).inner(tree)


class _Printer:
    def __init__(self, registry: MacroRegistry):
        self.registry = registry

    ############################################################################
    # sequences and arguments

    def inner(self, node: ExprTree) -> str:
        """
        Print a node without the braces a nested row would need.
        """
        if node.is_layout and "macro" not in node.attrs:
            return self.sequence(node.children)

        return self.node(node)

    def argument(self, node: ExprTree) -> str:
        return "{" + self.inner(node) + "}"

    def sequence(self, children: List[ExprTree]) -> str:
        parts = []

        for child in children:
            text = self.node(child)

            # keep separate numbers from being merged on re-parse
            if parts and text[:1].isdigit() and parts[-1][-1:] in "0123456789.":
                text = "{" + text + "}"

            parts.append(text)

        return " ".join(parts)

    ############################################################################
    # nodes

    def node(self, node: ExprTree) -> str:
        macro_name = node.attrs.get("macro")

        if macro_name is not None:
            call = self.macro_call(node, macro_name)
            if call is not None:
                return call

        if node.is_layout:
            return "{" + self.sequence(node.children) + "}"

        if node.is_leaf:
            return self.token(node)

        label = node.label

        if label == "Fraction":
            numerator, denominator = node.children
            return "\\frac" + self.argument(numerator) + self.argument(denominator)

        if label == "Sqrt":
            return "\\sqrt" + self.argument(node.children[0])

        if label == "Root":
            body, index = node.children
            return "\\sqrt[" + self.inner(index) + "]" + self.argument(body)

        if label == "Script":
            return self.script(node)

        if label == "Table":
            return self.table(node)

        if label == "Fenced":
            return self.fenced(node)

        raise ValueError(f"cannot print {node.label=} as TeX")

    def script(self, node: ExprTree) -> str:
        base = node.children[0]
        text = self.node(base)

        if base.label == "Script":
            text = "{" + text + "}"

        element = node.attrs.get("element")

        if element == "msubsup":
            _, sub, sup = node.children
            return text + "_" + self.argument(sub) + "^" + self.argument(sup)
        if element == "msub":
            return text + "_" + self.argument(node.children[1])

        return text + "^" + self.argument(node.children[1])

    def table(self, node: ExprTree) -> str:
        env = node.attrs.get("env", "matrix")

        rows = [
            " & ".join(self.inner(cell.children[0]) for cell in row.children)
            for row in node.children
        ]

        return f"\\begin{{{env}}} " + " \\\\ ".join(rows) + f" \\end{{{env}}}"

    def fenced(self, node: ExprTree) -> str:
        open_fence = node.attrs.get("open", "(")
        close_fence = node.attrs.get("close", ")")
        separator = node.attrs.get("separators", ",")[:1] or ","

        inner = f" {separator} ".join(self.inner(c) for c in node.children)

        return " ".join([self.fence(open_fence), inner, self.fence(close_fence)])

    def fence(self, text: str) -> str:
        return self.token(ExprTree.leaf(text, element="mo"))

    ############################################################################
    # tokens

    def token(self, leaf: ExprTree) -> str:
        text = leaf.label
        element = leaf.attrs.get("element", "mi")

        if element == "mn" or element == SLOT_ELEMENT:
            return text

        if element == "mtext":
            if leaf.attrs.get("role") == "label":
                return "\\tag{" + text + "}"
            return "\\text{" + text + "}"

        if element == "mo":
            return self.operator(text)

        variant = leaf.attrs.get("mathvariant")
        printed = self.identifier(text)

        if variant is not None and variant in _VARIANT_COMMANDS:
            return _VARIANT_COMMANDS[variant] + "{" + printed + "}"

        return printed

    def operator(self, text: str) -> str:
        if text in ("{", "}"):
            return "\\" + text
        if text in _GLYPH_TO_ASCII:
            return _GLYPH_TO_ASCII[text]
        if text in _ASCII_TOKENS:
            return text

        return self.symbol_command(text, "mo") or text

    def identifier(self, text: str) -> str:
        if len(text) == 1 and text.isascii() and text.isalpha():
            return text

        command = self.symbol_command(text, "mi")

        if command is not None:
            return command
        if len(text) == 1:
            return text

        return "\\operatorname{" + text + "}"

    def symbol_command(self, text: str, element: str) -> Optional[str]:
        command = self.registry.reverse_symbols().get(text)

        if command is not None and self.registry.get(command).element == element:
            return command

        # the first command found may render to another element
        for macro in self.registry:
            if macro.symbol == text and macro.element == element:
                return macro.name

        return None

    ############################################################################
    # macro calls

    def macro_call(self, node: ExprTree, bare_name: str) -> Optional[str]:
        bindings = macro_bindings(node, self.registry)

        if bindings is None:
            return None

        return self.format_call(self.registry.by_bare_name(bare_name), bindings)

    def format_call(self, macro: MacroDef, bindings: Dict[int, ExprTree]) -> str:
        empty = ExprTree("Row", [], {"element": "mrow"})
        parts = [macro.name]

        for slot in range(1, macro.optional_args + 1):
            arg = bindings.get(slot, empty)
            if not (arg.is_layout and arg.is_leaf):
                parts.append("[" + self.inner(arg) + "]")

        for index in range(macro.arity):
            if macro.at_split is not None and index == macro.at_split:
                parts.append("@")

            slot = macro.optional_args + index + 1
            parts.append(self.argument(bindings.get(slot, empty)))

        return "".join(parts)

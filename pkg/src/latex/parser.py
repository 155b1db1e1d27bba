################################################################################
#
# Recursive-descent parser from TeX tokens to a presentation tree.
#
# The tree stays as flat as the source: a row of tokens is one Row node, and
# only braces, macro arguments, scripts and environments open a new level.
# Leaves carry the rendered symbol as label and the MathML token element in
# attrs["element"].
#
# Author(s): Anonymous
################################################################################

import functools
import itertools

from typing import Callable, Dict, List, Optional

from src.latex.errors import ArityError, LatexSyntaxError, UnknownMacro
from src.latex.macros import MacroDef, MacroRegistry, default_registry
from src.latex.symbols import ASCII_GLYPHS, VARIANTS
from src.latex.tokenizer import Token, TokenKind, tokenize
from src.tree import ExprTree

################################################################################
# node constructors

ENVIRONMENTS = frozenset({"cases", "matrix", "pmatrix", "bmatrix", "vmatrix"})

SLOT_ELEMENT = "slot"


def token_leaf(text: str, element: str, **attrs: str) -> ExprTree:
    return ExprTree.leaf(text, element=element, **attrs)


def make_row(nodes: List[ExprTree]) -> ExprTree:
    if len(nodes) == 1:
        return nodes[0]

    return ExprTree("Row", list(nodes), {"element": "mrow"})


def make_script(
    base: ExprTree, sub: Optional[ExprTree], sup: Optional[ExprTree]
) -> ExprTree:
    if sub is not None and sup is not None:
        return ExprTree("Script", [base, sub, sup], {"element": "msubsup"})
    if sub is not None:
        return ExprTree("Script", [base, sub], {"element": "msub"})

    return ExprTree("Script", [base, sup], {"element": "msup"})


def text_of(tree: ExprTree) -> str:
    return "".join(leaf.label for leaf in tree.leaves())


################################################################################
# entrypoints


def parse(tokens: List[Token], registry: Optional[MacroRegistry] = None) -> ExprTree:
    registry = registry if registry is not None else default_registry()

    return _Parser(tokens, registry).parse()


def parse_tex(src: str, registry: Optional[MacroRegistry] = None) -> ExprTree:
    return parse(tokenize(src), registry)


@functools.lru_cache(maxsize=None)
def template_tree(registry: MacroRegistry, name: str) -> ExprTree:
    """
    The expansion of a template macro with slot leaves `#1`, `#2`, ...
    """
    macro = registry.get(name)

    if macro is None or macro.template is None:
        raise UnknownMacro(f"{name} is not a template macro")

    return _Parser(tokenize(macro.template, allow_slots=True), registry).parse()


################################################################################
# the parser


StopCondition = Callable[[Token], bool]


def _stop_at_group_close(tok: Token) -> bool:
    return tok.kind == TokenKind.GroupClose


def _stop_at_cell_end(tok: Token) -> bool:
    if tok.kind == TokenKind.GroupClose:
        return True
    if tok.kind == TokenKind.Operator and tok.lexeme == "&":
        return True

    return tok.kind == TokenKind.Command and tok.lexeme in ("\\\\", "\\end")


class _Parser:
    def __init__(self, tokens: List[Token], registry: MacroRegistry):
        self.tokens = [t for t in tokens if t.kind != TokenKind.Whitespace]
        self.registry = registry
        self.pos = 0

    ############################################################################
    # token access

    def peek(self, offset: int = 0) -> Optional[Token]:
        index = self.pos + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()

        if tok is None:
            raise LatexSyntaxError("unexpected end of input")

        self.pos += 1
        return tok

    def end_position(self) -> int:
        return self.tokens[-1].position if self.tokens else 0

    def expect(self, kind: TokenKind, context: str) -> Token:
        tok = self.peek()

        if tok is None or tok.kind != kind:
            position = tok.position if tok is not None else self.end_position()
            raise ArityError(f"{context}: expected {kind.value}", position)

        return self.next()

    ############################################################################
    # sequences

    def parse(self) -> ExprTree:
        nodes = self.parse_sequence(lambda tok: False)

        return make_row(nodes)

    def parse_sequence(self, stop: StopCondition) -> List[ExprTree]:
        nodes = []

        while True:
            tok = self.peek()

            if tok is None or stop(tok):
                break

            if tok.kind == TokenKind.GroupClose:
                raise LatexSyntaxError("unexpected '}'", tok.position)

            atom = self.parse_atom()

            if atom is None:
                continue

            nodes.append(self.parse_scripts(atom))

        return nodes

    def parse_group(self) -> ExprTree:
        self.expect(TokenKind.GroupOpen, "group")
        nodes = self.parse_sequence(_stop_at_group_close)
        self.expect(TokenKind.GroupClose, "group")

        return make_row(nodes)

    ############################################################################
    # atoms

    def parse_atom(self) -> Optional[ExprTree]:
        tok = self.peek()
        kind = tok.kind

        if kind in (TokenKind.SubscriptMarker, TokenKind.SuperscriptMarker):
            # script without base, e.g. {}^{14}C
            return make_row([])

        if kind == TokenKind.GroupOpen:
            return self.parse_group()

        self.next()

        if kind == TokenKind.Identifier:
            return token_leaf(tok.lexeme, "mi")
        if kind == TokenKind.Number:
            return self.parse_number(tok)
        if kind in (TokenKind.Operator, TokenKind.Relation):
            return self.operator_leaf(tok)
        if kind in (TokenKind.OpenFence, TokenKind.CloseFence):
            return token_leaf(tok.lexeme.lstrip("\\"), "mo")
        if kind == TokenKind.Text:
            return token_leaf(tok.lexeme, "mtext")
        if kind == TokenKind.Command:
            return self.parse_command(tok)

        raise LatexSyntaxError(f"unexpected token {tok}", tok.position)

    def parse_number(self, first: Token) -> ExprTree:
        digits = [first.lexeme]
        seen_point = False

        while True:
            tok = self.peek()

            if tok is not None and tok.kind == TokenKind.Number:
                digits.append(self.next().lexeme)
                continue

            after = self.peek(1)
            if (
                not seen_point
                and tok is not None
                and tok.kind == TokenKind.Operator
                and tok.lexeme == "."
                and after is not None
                and after.kind == TokenKind.Number
            ):
                seen_point = True
                digits.append(self.next().lexeme)
                continue

            break

        return token_leaf("".join(digits), "mn")

    @staticmethod
    def operator_leaf(tok: Token) -> ExprTree:
        return token_leaf(ASCII_GLYPHS.get(tok.lexeme, tok.lexeme), "mo")

    ############################################################################
    # scripts

    def parse_scripts(self, base: ExprTree) -> ExprTree:
        sub = sup = None
        primes = []

        while True:
            tok = self.peek()

            if tok is None:
                break

            if tok.kind == TokenKind.SubscriptMarker:
                if sub is not None:
                    raise LatexSyntaxError("double subscript", tok.position)
                self.next()
                sub = self.read_argument("_")

            elif tok.kind == TokenKind.SuperscriptMarker:
                if sup is not None:
                    raise LatexSyntaxError("double superscript", tok.position)
                self.next()
                sup = self.read_argument("^")

            elif tok.kind == TokenKind.Operator and tok.lexeme == "'":
                if sup is not None:
                    raise LatexSyntaxError("prime after superscript", tok.position)
                self.next()
                primes.append(token_leaf(ASCII_GLYPHS["'"], "mo"))

            else:
                break

        if primes:
            sup = make_row(primes) if sup is None else make_row([*primes, sup])

        if sub is None and sup is None:
            return base

        return make_script(base, sub, sup)

    ############################################################################
    # arguments

    def read_argument(self, context: str) -> ExprTree:
        """
        One undelimited argument: a braced group or exactly one token.
        """
        tok = self.peek()

        if tok is None or tok.kind in (
            TokenKind.GroupClose,
            TokenKind.SubscriptMarker,
            TokenKind.SuperscriptMarker,
        ):
            position = tok.position if tok is not None else self.end_position()
            raise ArityError(f"missing argument for {context}", position)

        if tok.kind == TokenKind.GroupOpen:
            return self.parse_group()

        if tok.kind == TokenKind.Number:
            # \frac12 takes the digits one at a time
            return token_leaf(self.next().lexeme, "mn")

        atom = self.parse_atom()

        if atom is None:
            raise ArityError(f"missing argument for {context}", tok.position)

        return atom

    def read_optional(self) -> Optional[ExprTree]:
        tok = self.peek()

        if tok is None or tok.kind != TokenKind.OpenFence or tok.lexeme != "[":
            return None

        self.next()
        start = self.pos
        depth = 0

        while True:
            tok = self.peek()

            if tok is None:
                raise LatexSyntaxError("unterminated optional argument")
            if tok.kind == TokenKind.OpenFence and tok.lexeme == "[":
                depth += 1
            elif tok.kind == TokenKind.CloseFence and tok.lexeme == "]":
                if depth == 0:
                    break
                depth -= 1

            self.pos += 1

        inner = _Parser(self.tokens[start : self.pos], self.registry).parse()
        self.next()

        return inner

    def read_raw_text(self, context: str) -> str:
        self.expect(TokenKind.GroupOpen, context)

        parts = []
        while self.peek() is not None and self.peek().kind != TokenKind.GroupClose:
            parts.append(self.next().lexeme)

        self.expect(TokenKind.GroupClose, context)

        return "".join(parts)

    ############################################################################
    # commands

    def parse_command(self, tok: Token) -> Optional[ExprTree]:
        if tok.lexeme.startswith("#"):
            return token_leaf(tok.lexeme, SLOT_ELEMENT)

        macro = self.registry.get(tok.lexeme)

        if macro is None:
            raise UnknownMacro(f"unknown command {tok.lexeme}", tok.position)

        if macro.symbol is not None:
            return token_leaf(macro.symbol, macro.element)

        if macro.template is not None:
            return self.expand_template(macro, tok)

        return getattr(self, f"handle_{macro.handler}")(macro, tok)

    def expand_template(self, macro: MacroDef, tok: Token) -> ExprTree:
        args = []

        for _ in range(macro.optional_args):
            optional = self.read_optional()
            args.append(optional if optional is not None else make_row([]))

        for index in range(macro.arity):
            if macro.at_split is not None and index == macro.at_split:
                self.read_at_separator(macro, tok)
            args.append(self.read_argument(macro.name))

        template = template_tree(self.registry, macro.name)
        expansion = _substitute(template, args, macro.optional_args)
        expansion.attrs["macro"] = macro.bare_name

        return expansion

    def read_at_separator(self, macro: MacroDef, tok: Token):
        count = 0

        while True:
            nxt = self.peek()
            if nxt is None or nxt.kind != TokenKind.Operator or nxt.lexeme != "@":
                break
            self.next()
            count += 1

        if count == 0:
            raise ArityError(
                f"{macro.name} expects '@' before its arguments", tok.position
            )

    ############################################################################
    # structural built-ins

    def handle_frac(self, macro: MacroDef, tok: Token) -> ExprTree:
        numerator = self.read_argument(macro.name)
        denominator = self.read_argument(macro.name)

        return ExprTree("Fraction", [numerator, denominator], {"element": "mfrac"})

    def handle_sqrt(self, macro: MacroDef, tok: Token) -> ExprTree:
        index = self.read_optional()
        body = self.read_argument(macro.name)

        if index is None:
            return ExprTree("Sqrt", [body], {"element": "msqrt"})

        return ExprTree("Root", [body, index], {"element": "mroot"})

    def handle_operatorname(self, macro: MacroDef, tok: Token) -> ExprTree:
        name = self.read_raw_text(macro.name).strip()

        if not name:
            raise ArityError(f"empty argument for {macro.name}", tok.position)

        return token_leaf(name, "mi")

    def handle_text(self, macro: MacroDef, tok: Token) -> ExprTree:
        return token_leaf(self.read_raw_text(macro.name), "mtext")

    def handle_variant(self, macro: MacroDef, tok: Token) -> ExprTree:
        argument = self.read_argument(macro.name)
        return _with_variant(argument, VARIANTS[macro.name])

    def handle_delimiter(self, macro: MacroDef, tok: Token) -> Optional[ExprTree]:
        nxt = self.peek()

        if nxt is None:
            raise ArityError(f"{macro.name} expects a delimiter", tok.position)

        if nxt.kind == TokenKind.Operator and nxt.lexeme == ".":
            self.next()
            return None

        return self.parse_atom()

    def handle_scale(self, macro: MacroDef, tok: Token) -> None:
        return None

    def handle_tag(self, macro: MacroDef, tok: Token) -> ExprTree:
        content = self.read_argument(macro.name)
        return token_leaf(text_of(content), "mtext", role="label")

    def handle_end(self, macro: MacroDef, tok: Token) -> ExprTree:
        raise LatexSyntaxError("\\end without \\begin", tok.position)

    def handle_rowsep(self, macro: MacroDef, tok: Token) -> ExprTree:
        raise LatexSyntaxError("row separator outside of an environment", tok.position)

    def handle_begin(self, macro: MacroDef, tok: Token) -> ExprTree:
        name = self.read_raw_text("\\begin")

        if name not in ENVIRONMENTS:
            raise UnknownMacro(f"unsupported environment {name}", tok.position)

        rows = []
        cells = []

        while True:
            cell = self.parse_sequence(_stop_at_cell_end)
            cells.append(make_row(cell))

            sep = self.peek()

            if sep is None:
                raise LatexSyntaxError(f"unterminated environment {name}", tok.position)
            if sep.kind == TokenKind.GroupClose:
                raise LatexSyntaxError(f"unexpected '}}' in {name}", sep.position)

            self.next()

            if sep.lexeme == "&":
                continue
            if sep.lexeme == "\\\\":
                rows.append(cells)
                cells = []
                continue

            end_name = self.read_raw_text("\\end")
            if end_name != name:
                raise LatexSyntaxError(
                    f"\\begin{{{name}}} closed by \\end{{{end_name}}}", sep.position
                )

            # a trailing row separator leaves one empty cell behind
            if not (len(cells) == 1 and cells[0].label == "Row" and cells[0].is_leaf):
                rows.append(cells)
            break

        table_rows = [
            ExprTree(
                "TableRow",
                [ExprTree("TableCell", [c], {"element": "mtd"}) for c in row],
                {"element": "mtr"},
            )
            for row in rows
        ]

        return ExprTree("Table", table_rows, {"element": "mtable", "env": name})


################################################################################
# helpers


def _substitute(
    template: ExprTree, args: List[ExprTree], optional_args: int = 0
) -> ExprTree:
    if template.attrs.get("element") == SLOT_ELEMENT:
        return args[int(template.label[1:]) - 1].copy()

    children = [_substitute(c, args, optional_args) for c in template.children]

    if template.label == "Script" and optional_args:
        return _without_omitted_scripts(template, children, optional_args)

    return ExprTree(template.label, children, dict(template.attrs))


def _is_optional_slot(node: ExprTree, optional_args: int) -> bool:
    return (
        node.attrs.get("element") == SLOT_ELEMENT
        and int(node.label[1:]) <= optional_args
    )


def _without_omitted_scripts(
    template: ExprTree, children: List[ExprTree], optional_args: int
) -> ExprTree:
    # an omitted optional argument leaves no empty script slot behind
    kept: List[Optional[ExprTree]] = [children[0]]

    for slot, child in zip(template.children[1:], children[1:]):
        omitted = child.label == "Row" and child.is_leaf

        if omitted and _is_optional_slot(slot, optional_args):
            child = None

        kept.append(child)

    element = template.attrs.get("element")
    base = kept[0]
    sub = kept[1] if element in ("msub", "msubsup") else None
    sup = kept[-1] if element in ("msup", "msubsup") else None

    if sub is None and sup is None:
        return base

    script = make_script(base, sub, sup)
    script.attrs.update({k: v for k, v in template.attrs.items() if k != "element"})

    return script


def macro_bindings(
    node: ExprTree, registry: MacroRegistry
) -> Optional[Dict[int, ExprTree]]:
    """
    Recover the arguments of a macro expansion tagged with attrs["macro"] by
    matching it against the expansion of the macro template. Returns None when
    the node is not an intact expansion. Omitted optional arguments are not
    bound.
    """
    bare_name = node.attrs.get("macro")
    macro = registry.by_bare_name(bare_name) if bare_name is not None else None

    if macro is None or macro.template is None:
        return None

    template = template_tree(registry, macro.name)
    slots = [
        token_leaf(f"#{i}", SLOT_ELEMENT) for i in range(1, macro.total_args + 1)
    ]

    for omitted in itertools.product((False, True), repeat=macro.optional_args):
        args = [
            make_row([]) if omit else slot for omit, slot in zip(omitted, slots)
        ]
        pattern = _substitute(
            template, args + slots[macro.optional_args :], macro.optional_args
        )
        bindings: Dict[int, ExprTree] = {}

        if _match_template(pattern, node, bindings, True):
            return bindings

    return None


# attributes which are not part of the template
_UNMATCHED_ATTRS = frozenset({"id", "macro"})


def _match_template(
    pattern: ExprTree, node: ExprTree, bindings: Dict[int, ExprTree], root: bool
) -> bool:
    if pattern.attrs.get("element") == SLOT_ELEMENT:
        slot = int(pattern.label[1:])
        bound = bindings.get(slot)

        if bound is None:
            bindings[slot] = node
            return True

        return bound.without_attrs("id") == node.without_attrs("id")

    if pattern.label != node.label or len(pattern.children) != len(node.children):
        return False

    # a nested macro call is an argument, never part of the template
    if not root and "macro" in node.attrs and "macro" not in pattern.attrs:
        return False

    node_attrs = {k: v for k, v in node.attrs.items() if k not in _UNMATCHED_ATTRS}
    pattern_attrs = {
        k: v for k, v in pattern.attrs.items() if k not in _UNMATCHED_ATTRS
    }

    if node_attrs != pattern_attrs:
        return False

    return all(
        _match_template(p, n, bindings, False)
        for p, n in zip(pattern.children, node.children)
    )


def _with_variant(tree: ExprTree, variant: str) -> ExprTree:
    attrs = dict(tree.attrs)

    if tree.is_leaf and attrs.get("element") == "mi":
        attrs["mathvariant"] = variant

    children = [_with_variant(c, variant) for c in tree.children]
    return ExprTree(tree.label, children, attrs)

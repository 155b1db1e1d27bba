################################################################################
#
# Derive content trees from presentation trees.
#
# The presentation tree is numbered, invisible operators are made explicit and
# every row is parsed with a precedence climbing parser. Binding powers, from
# loosest to tightest:
#
#   ,                   list separator, split before parsing
#   ⇒ ⇐ ⇔               10, right associative
#   ∨                   20, n-ary
#   ∧                   22, n-ary
#   = < ≤ ∈ ...         30, chains of one relation are n-ary,
#                           mixed chains become a conjunction of pairs
#   + − ± ∪             40, + and ∪ n-ary
#   unknown operators   45
#   ⋅ × ∗ / ⁢ ∘         50, times n-ary
#   unary − + ±         55
#   ⁡                   70, right associative
#   !                   80, postfix
#
# Big operators (∑, ∏, ∫) take their scripts as limits and the following
# product as body. Afterwards the special heads are resolved and the enabled
# script refinements are applied.
#
# Author(s): Anonymous
################################################################################

import logging

from dataclasses import dataclass
from typing import AbstractSet, List, Optional

from src.content.einstein import detect_einstein
from src.content.errors import ContentError
from src.content.invisible import (
    FUNCTION_APPLICATION,
    INVISIBLE_TIMES,
    OPERAND_OPERATORS,
    disambiguate_invisible,
    is_invisible,
    is_label,
    is_mo,
)
from src.content.nodes import (
    OPERATOR_CDS,
    ambiguous,
    annotated,
    ci,
    cn,
    csymbol,
    make_apply,
    op,
    strip_internal,
)
from src.content.refinement import RefinementConfig
from src.content.roles import (
    BIG_OPERATORS,
    Annotations,
    check_unambiguous,
    reading_of,
)
from src.content.rules import apply_power_rule, apply_subscript_rule
from src.content.special_heads import apply_special_heads
from src.latex.macros import MacroRegistry, default_registry
from src.latex.symbols import RELATIONS
from src.tree import ExprTree, has_ids, number_nodes, to_bracket

log = logging.getLogger(__name__)

################################################################################
# operator table


@dataclass(frozen=True)
class _Operator:
    # content symbol, the glyph itself for operators without one
    name: str

    lbp: int
    rbp: int

    # chains of the same operator collect into one node
    nary: bool = False

    relation: bool = False

    # the operands are stored in reversed order, e.g. for ⇐
    swap: bool = False


def _relation(name: str) -> _Operator:
    return _Operator(name, 30, 31, relation=True)


TIMES = _Operator("times", 50, 51, nary=True)
APPLY = _Operator("apply", 70, 70)

INFIX = {
    "⇒": _Operator("implies", 10, 10),
    "⇐": _Operator("implies", 10, 10, swap=True),
    "⇔": _Operator("equivalent", 10, 10),
    "∨": _Operator("or", 20, 21, nary=True),
    "∧": _Operator("and", 22, 23, nary=True),
    "=": _relation("eq"),
    "≠": _relation("neq"),
    "<": _relation("lt"),
    ">": _relation("gt"),
    "≤": _relation("leq"),
    "≥": _relation("geq"),
    "≈": _relation("approx"),
    "≡": _relation("equivalent"),
    "∈": _relation("in"),
    "⊂": _relation("subset"),
    "→": _relation("tendsto"),
    "+": _Operator("plus", 40, 41, nary=True),
    "−": _Operator("minus", 40, 41),
    "±": _Operator("plusminus", 40, 41),
    "∓": _Operator("minusplus", 40, 41),
    "∪": _Operator("union", 40, 41, nary=True),
    "∩": _Operator("intersect", 40, 41, nary=True),
    "∖": _Operator("setdiff", 40, 41),
    "⋅": TIMES,
    "×": TIMES,
    "∗": TIMES,
    INVISIBLE_TIMES: TIMES,
    "/": _Operator("divide", 50, 51),
    "÷": _Operator("divide", 50, 51),
    "∘": _Operator("compose", 50, 51),
    FUNCTION_APPLICATION: APPLY,
}

# glyph -> (content symbol or None for identity, right binding power)
PREFIX = {
    "−": ("minus", 55),
    "+": (None, 55),
    "±": ("plusminus", 55),
    "¬": ("not", 25),
}

POSTFIX = {"!": ("factorial", 80)}

RELATION_GLYPHS = frozenset(RELATIONS.values())

BIG_OPERATOR_NAMES = {"∑": "sum", "∏": "product", "∫": "int", "∮": "int"}

# binding power of the body of a big operator
BODY_BP = 45


def _node(operator: _Operator, children: List[ExprTree], src: Optional[str]):
    if operator.name in OPERATOR_CDS:
        return op(operator.name, children, src)

    node = ambiguous(operator.name, children, src)

    if operator.relation:
        node.attrs["name"] = "relation"

    return node


def split_commas(items: List[ExprTree]) -> List[List[ExprTree]]:
    parts: List[List[ExprTree]] = [[]]

    for item in items:
        if is_mo(item, ","):
            parts.append([])
        else:
            parts[-1].append(item)

    return parts


################################################################################
# entrypoint


def contentize(
    tree: ExprTree,
    annotations: Optional[Annotations] = None,
    cfg: Optional[RefinementConfig] = None,
    registry: Optional[MacroRegistry] = None,
) -> ExprTree:
    """
    Derive the content tree of the presentation `tree`. Content nodes refer to
    the presentation node they stem from with a `src` attribute holding its
    id; a tree without ids is numbered first.
    """
    annotations = annotations if annotations is not None else {}
    cfg = cfg if cfg is not None else RefinementConfig()
    registry = registry if registry is not None else default_registry()

    if not has_ids(tree):
        tree, _ = number_nodes(tree)

    if not cfg.any_enabled:
        check_unambiguous(tree, annotations, registry)

    einstein_ids = detect_einstein(tree) if cfg.einstein_detection else set()

    tagged = disambiguate_invisible(
        tree, annotations, registry, apply_functions=cfg.function_apply_rule
    )

    content = _Contentizer(annotations, registry, einstein_ids).root(tagged)
    content = apply_special_heads(content, registry)

    if cfg.subscript_rule:
        content = apply_subscript_rule(content)
    if cfg.power_rule:
        content = apply_power_rule(content)

    return strip_internal(content)


################################################################################
# the precedence climbing parser


class _Stream:
    def __init__(self, items: List[ExprTree]):
        self.items = items
        self.pos = 0

    def peek(self) -> Optional[ExprTree]:
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self) -> ExprTree:
        item = self.items[self.pos]
        self.pos += 1
        return item


class _Contentizer:
    def __init__(
        self,
        annotations: Annotations,
        registry: MacroRegistry,
        einstein_ids: AbstractSet[str],
    ):
        self.annotations = annotations
        self.registry = registry
        self.einstein_ids = einstein_ids

    ############################################################################
    # rows

    def root(self, tree: ExprTree) -> ExprTree:
        if tree.is_layout:
            return self.sequence(tree.children, root=True)

        return self.atom(tree)

    def sequence(self, items: List[ExprTree], root: bool = False) -> ExprTree:
        labels = [i for i in items if is_label(i)]
        items = [i for i in items if not is_label(i)]

        constraint = None

        if root and items and self.is_constraint(items[-1]):
            constraint = items.pop()

            while items and is_invisible(items[-1]):
                items.pop()

        parts = split_commas(items)

        if len(parts) > 1:
            result = csymbol(
                "list", "list1", [self.expression(p) for p in parts if p]
            )
        else:
            result = self.expression(items)

        for label in labels:
            result = ambiguous(
                "tag", [result, ci(label.label, label.attrs.get("id"))]
            )

        if constraint is not None:
            modulus = strip_internal(self.macro(constraint)).without_attrs()
            result.attrs["constraint"] = to_bracket(modulus)

        return result

    def is_constraint(self, node: ExprTree) -> bool:
        if node.label != "Macro":
            return False

        macro = self.registry.by_bare_name(node.attrs["macro"])
        return macro is not None and macro.role == "constraint"

    def expression(self, items: List[ExprTree]) -> ExprTree:
        stream = _Stream(items)
        result = self.parse(stream, 0)

        if result is None:
            return ambiguous("empty", [])

        return result

    ############################################################################
    # precedence climbing

    def parse(self, stream: _Stream, min_bp: int) -> Optional[ExprTree]:
        left = self.prefix(stream)

        if left is None:
            return None

        # n-ary node or relation chain under construction at this level
        chain = None
        last_operand = None
        conjunction = None

        while True:
            tok = stream.peek()

            if tok is None:
                break

            if is_mo(tok) and tok.label in POSTFIX:
                name, bp = POSTFIX[tok.label]

                if bp < min_bp:
                    break

                stream.next()
                left = op(name, [left], tok.attrs.get("id"))
                chain = conjunction = None
                continue

            operator = self.infix_operator(tok)
            explicit = operator is not None
            operator = operator if explicit else TIMES

            if operator.lbp < min_bp:
                break

            src = None

            if explicit:
                stream.next()
                src = tok.attrs.get("id")

            if operator is APPLY:
                left = make_apply(left, self.application_arguments(stream))
                chain = conjunction = None
                continue

            right = self.parse(stream, operator.rbp)

            if right is None:
                # dangling operator at the end of the row
                left = _node(operator, [left], src)
                break

            relation_chain = chain is not None and chain.startswith("rel:")

            if operator.relation and relation_chain:
                if chain == "rel:" + operator.name and conjunction is None:
                    left.children.append(right)
                else:
                    # the shared operand is repeated without its source
                    shared = last_operand.without_attrs("src")
                    pair = _node(operator, [shared, right], src)

                    if conjunction is None:
                        conjunction = op("and", [left, pair])
                        left = conjunction
                    else:
                        conjunction.children.append(pair)

                last_operand = right

            elif operator.nary and chain == operator.name:
                left.children.append(right)

            else:
                operands = [right, left] if operator.swap else [left, right]
                left = _node(operator, operands, src)
                conjunction = None

                if operator.relation:
                    chain = "rel:" + operator.name
                    last_operand = right
                else:
                    chain = operator.name if operator.nary else None

        return left

    def infix_operator(self, tok: ExprTree) -> Optional[_Operator]:
        if not is_mo(tok) or tok.label in OPERAND_OPERATORS:
            return None

        if tok.label in INFIX:
            return INFIX[tok.label]
        if tok.label in RELATION_GLYPHS:
            return _relation(tok.label)

        return _Operator(tok.label, 45, 46)

    def prefix(self, stream: _Stream) -> Optional[ExprTree]:
        tok = stream.peek()

        if tok is None:
            return None

        stream.next()
        src = tok.attrs.get("id")

        if is_mo(tok) and tok.label in PREFIX:
            name, bp = PREFIX[tok.label]
            operand = self.parse(stream, bp)

            if operand is None:
                return ci(tok.label, src)
            if name is None:
                return operand
            if name in OPERATOR_CDS:
                return op(name, [operand], src)

            return ambiguous(name, [operand], src)

        if self.is_big_operator(tok):
            return self.big_operator(tok, stream)

        return self.atom(tok)

    @staticmethod
    def is_big_operator(tok: ExprTree) -> bool:
        if tok.label == "Script":
            tok = tok.children[0]

        return is_mo(tok) and tok.label in BIG_OPERATORS

    def big_operator(self, tok: ExprTree, stream: _Stream) -> ExprTree:
        limits = []
        glyph = tok

        if tok.label == "Script":
            glyph = tok.children[0]
            limits = [self.atom(c) for c in tok.children[1:]]

        nxt = stream.peek()
        if nxt is not None and is_invisible(nxt):
            stream.next()

        body = self.parse(stream, BODY_BP)
        children = limits + ([body] if body is not None else [])

        return op(BIG_OPERATOR_NAMES[glyph.label], children, tok.attrs.get("id"))

    def application_arguments(self, stream: _Stream) -> List[ExprTree]:
        nxt = stream.peek()

        if nxt is not None and nxt.label == "Fenced" and nxt.attrs.get("open") == "(":
            if nxt.attrs.get("close") == ")":
                stream.next()
                return self.arguments(nxt.children)

        right = self.parse(stream, APPLY.rbp)

        return [right] if right is not None else []

    def arguments(self, items: List[ExprTree]) -> List[ExprTree]:
        return [self.expression(part) for part in split_commas(items) if part]

    ############################################################################
    # operands

    def atom(self, node: ExprTree) -> ExprTree:
        if node.label == "Macro":
            return self.macro(node)
        if node.label == "Fenced":
            return self.fenced(node)
        if node.is_layout:
            return self.sequence(node.children)
        if node.is_leaf:
            return self.token(node)

        src = node.attrs.get("id")
        label = node.label

        if label == "Fraction":
            numerator, denominator = node.children

            if _is_integer(numerator) and _is_integer(denominator):
                return csymbol(
                    "rational",
                    "nums1",
                    [self.token(numerator), self.token(denominator)],
                    src,
                )

            return op("divide", [self.atom(numerator), self.atom(denominator)], src)

        if label == "Sqrt":
            return op("root", [self.atom(node.children[0])], src)

        if label == "Root":
            body, index = node.children
            return op("root", [self.atom(body), self.atom(index)], src)

        if label == "Script":
            return self.script(node)

        if label == "Table":
            return self.table(node)

        raise ContentError(f"cannot derive content of {label=}")

    def token(self, leaf: ExprTree) -> ExprTree:
        src = leaf.attrs.get("id")
        element = leaf.attrs.get("element")

        if element == "mn":
            return cn(leaf.label, src)

        if element == "mtext":
            return ci(leaf.label.strip(), src, text="true")

        reading = reading_of(leaf, self.annotations, self.registry)

        if reading is not None and reading.annotation is not None:
            return annotated(reading.annotation, [], src)

        return ci(leaf.label, src)

    def script(self, node: ExprTree) -> ExprTree:
        element = node.attrs.get("element")
        src = node.attrs.get("id")

        sub = node.children[1] if element in ("msub", "msubsup") else None
        sup = node.children[-1] if element in ("msup", "msubsup") else None

        result = self.atom(node.children[0])

        if sub is not None:
            outer = src if sup is None else None
            result = ambiguous("subscript", [result, *self.indices(sub)], outer)

        if sup is not None:
            result = ambiguous("superscript", [result, self.atom(sup)], src)

            if any(leaf.attrs.get("id") in self.einstein_ids for leaf in sup.leaves()):
                result.attrs["einstein"] = "true"

        return result

    def indices(self, sub: ExprTree) -> List[ExprTree]:
        """
        A subscript row of plain letters and numbers, as in `a_{ij}`, is a list
        of indices. Anything else is a single index expression.
        """
        if sub.is_layout:
            tokens = [c for c in sub.children if not is_invisible(c)]

            if len(tokens) > 1 and all(
                t.is_leaf and t.attrs.get("element") in ("mi", "mn") for t in tokens
            ):
                return [self.token(t) for t in tokens]

        return [self.atom(sub)]

    def fenced(self, node: ExprTree) -> ExprTree:
        open_fence = node.attrs.get("open")
        close_fence = node.attrs.get("close")
        src = node.attrs.get("src")

        parts = [p for p in split_commas(node.children) if p]
        items = [self.expression(p) for p in parts]
        delimiters = open_fence + close_fence

        if delimiters in ("()", "[]") and len(items) == 1:
            return items[0]

        if delimiters == "()":
            return csymbol("list", "list1", items, src)

        if len(items) == 2 and open_fence in "([" and close_fence in ")]":
            kind = {"[]": "interval_cc", "[)": "interval_co", "(]": "interval_oc"}
            return csymbol(kind[delimiters], "interval1", items, src)

        if delimiters == "||":
            return op("abs", items, src)
        if delimiters == "{}":
            return csymbol("set", "set1", items, src)
        if delimiters == "⌊⌋":
            return csymbol("floor", "rounding1", items, src)
        if delimiters == "⌈⌉":
            return csymbol("ceiling", "rounding1", items, src)
        if delimiters == "‖‖":
            return ambiguous("norm", items, src)

        return ambiguous("fenced", items, src)

    def table(self, node: ExprTree) -> ExprTree:
        env = node.attrs.get("env")
        src = node.attrs.get("id")
        rows = [[cell.children[0] for cell in row.children] for row in node.children]

        if env == "cases":
            cases = [
                ambiguous("case", [self.atom(cells[0]), *self.condition(cells[1:])])
                for cells in rows
            ]
            return ambiguous("cases", cases, src)

        matrix = csymbol(
            "matrix",
            "linalg2",
            [csymbol("matrixrow", "linalg2", [self.atom(c) for c in r]) for r in rows],
            src,
        )

        if env == "vmatrix":
            return op("determinant", [matrix])

        return matrix

    def condition(self, cells: List[ExprTree]) -> List[ExprTree]:
        if not cells:
            return []

        cell = cells[0]
        items = cell.children if cell.is_layout else [cell]

        # words such as "if" or "otherwise" are dropped
        items = [i for i in items if i.attrs.get("element") != "mtext"]

        while items and is_invisible(items[0]):
            items.pop(0)
        while items and is_invisible(items[-1]):
            items.pop()

        return [self.sequence(items)] if items else []

    def macro(self, node: ExprTree) -> ExprTree:
        macro = self.registry.by_bare_name(node.attrs["macro"])
        src = node.attrs.get("id")
        args = node.children

        if macro.role == "apply":
            head = self.atom(args[0])
            operand = args[1]
            items = operand.children if operand.is_layout else [operand]

            return make_apply(head, self.arguments(items))

        children = [self.atom(a) for a in args if not _is_empty(a)]

        if macro.semantics is not None:
            return annotated(macro.semantics, children, src)

        return ambiguous(macro.bare_name, children, src)


def _is_integer(node: ExprTree) -> bool:
    return node.is_leaf and node.attrs.get("element") == "mn" and node.label.isdigit()


def _is_empty(node: ExprTree) -> bool:
    return node.is_layout and node.is_leaf

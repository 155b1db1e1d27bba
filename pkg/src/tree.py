################################################################################
#
# Ordered, labeled expression trees. The same structure holds presentation
# trees (parsed TeX or presentation MathML), content trees and generic XML
# trees produced by third-party converters.
#
# Author(s): Anonymous
################################################################################

import dataclasses

from typing import Dict, Iterator, List, Optional, Tuple

################################################################################
# the tree structure

# layout containers which group tokens but are not tokens themselves
LAYOUT_LABELS = frozenset({"Row"})


@dataclasses.dataclass()
class ExprTree:
    # token lexeme or structural label (Fraction, Script, Row, ...)
    label: str

    # ordered children
    children: List["ExprTree"] = dataclasses.field(default_factory=list)

    # e.g. {"element": "mi"} or {"cd": "wikidata", "id": "21"}
    attrs: Dict[str, str] = dataclasses.field(default_factory=dict)

    @classmethod
    def leaf(cls, label: str, **attrs: str) -> "ExprTree":
        return cls(label, [], dict(attrs))

    @classmethod
    def node(cls, label: str, *children: "ExprTree", **attrs: str) -> "ExprTree":
        return cls(label, list(children), dict(attrs))

    @property
    def is_leaf(self) -> bool:
        return len(self.children) == 0

    @property
    def is_layout(self) -> bool:
        return self.label in LAYOUT_LABELS

    def preorder(self) -> Iterator["ExprTree"]:
        stack = [self]

        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def walk(self, depth: int = 0) -> Iterator[Tuple["ExprTree", int]]:
        """
        Yield every node together with its depth, where the root has depth 0.
        """
        yield self, depth

        for child in self.children:
            yield from child.walk(depth + 1)

    def leaves(self) -> List["ExprTree"]:
        return [n for n in self.preorder() if n.is_leaf and not n.is_layout]

    def size(self) -> int:
        return sum(1 for _ in self.preorder())

    def token_count(self) -> int:
        return sum(1 for n in self.preorder() if not n.is_layout)

    def depth(self) -> int:
        own = 0 if self.is_layout else 1

        if self.is_leaf:
            return own

        return own + max(c.depth() for c in self.children)

    def copy(self) -> "ExprTree":
        return ExprTree(
            self.label, [c.copy() for c in self.children], dict(self.attrs)
        )

    def replace(self, **changes) -> "ExprTree":
        # shallow: children list and attrs are copied, grandchildren shared
        if "children" not in changes:
            changes["children"] = list(self.children)
        if "attrs" not in changes:
            changes["attrs"] = dict(self.attrs)

        return dataclasses.replace(self, **changes)

    def without_attrs(self, *keys: str) -> "ExprTree":
        """
        Deep copy in which the given attribute keys are removed from every node.
        When no key is given, all attributes are removed.
        """
        if keys:
            attrs = {k: v for k, v in self.attrs.items() if k not in keys}
        else:
            attrs = {}

        return ExprTree(
            self.label, [c.without_attrs(*keys) for c in self.children], attrs
        )

    def same_shape(self, other: "ExprTree") -> bool:
        """
        Structural equality on labels and children, ignoring attributes.
        """
        if self.label != other.label or len(self.children) != len(other.children):
            return False

        return all(a.same_shape(b) for a, b in zip(self.children, other.children))

    def find(self, node_id: str) -> Optional["ExprTree"]:
        for n in self.preorder():
            if n.attrs.get("id") == node_id:
                return n

        return None

    def to_bracket(self) -> str:
        return to_bracket(self)

    def __str__(self) -> str:
        return self.to_bracket()


################################################################################
# bracket notation, e.g. {eq{a}{plus{b}{c}}}, the format apted's helpers use


_ESCAPED = {"{", "}", "\\"}


def _escape(label: str) -> str:
    return "".join(f"\\{c}" if c in _ESCAPED else c for c in label)


def to_bracket(tree: ExprTree) -> str:
    inner = "".join(to_bracket(c) for c in tree.children)
    return "{" + _escape(tree.label) + inner + "}"


def from_bracket(text: str) -> ExprTree:
    text = text.strip()

    tree, end = _read_bracket(text, 0)

    if text[end:].strip():
        raise ValueError(f"trailing input after tree: {text[end:]=}")

    return tree


def _read_bracket(text: str, pos: int) -> Tuple[ExprTree, int]:
    if pos >= len(text) or text[pos] != "{":
        raise ValueError(f"expected '{{' at position {pos} in {text=}")

    pos += 1
    label = []

    while pos < len(text) and text[pos] not in "{}":
        if text[pos] == "\\" and pos + 1 < len(text):
            pos += 1
        label.append(text[pos])
        pos += 1

    children = []

    while pos < len(text) and text[pos] == "{":
        child, pos = _read_bracket(text, pos)
        children.append(child)

    if pos >= len(text) or text[pos] != "}":
        raise ValueError(f"unbalanced bracket tree: {text=}")

    return ExprTree("".join(label), children), pos + 1


################################################################################
# node numbering


def number_nodes(tree: ExprTree, start: int = 1) -> Tuple[ExprTree, int]:
    """
    Return a copy of `tree` whose non-layout nodes carry consecutive
    `id` attributes in pre-order, beginning at `start`, together with the
    next free id. Layout rows receive no id.
    """
    counter = [start]

    def visit(node: ExprTree) -> ExprTree:
        attrs = dict(node.attrs)
        attrs.pop("id", None)

        if not node.is_layout:
            attrs["id"] = str(counter[0])
            counter[0] += 1

        return ExprTree(node.label, [visit(c) for c in node.children], attrs)

    numbered = visit(tree)

    return numbered, counter[0]


def has_ids(tree: ExprTree) -> bool:
    return all("id" in n.attrs for n in tree.preorder() if not n.is_layout)

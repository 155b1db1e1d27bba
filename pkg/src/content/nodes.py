################################################################################
#
# Constructors for content tree nodes.
#
# Content trees are written head-as-node: the application of a symbol to its
# arguments is the symbol node with the arguments as children. Only when the
# head is itself compound does an explicit `apply` node appear, with the head
# as child 0. The `kind` attribute tells the node types apart:
#
#   ci        identifier, label is the name
#   cn        number, label is the value
#   op        MathML operator with its own element, label is e.g. "eq"
#   csymbol   content dictionary symbol, label is the symbol id
#   apply     application of a compound head
#
# Author(s): Anonymous
################################################################################

from typing import List, Optional

from src.semantics.annotation import SemanticAnnotation
from src.tree import ExprTree

################################################################################
# well-known symbols

# MathML operators and the content dictionary they belong to
OPERATOR_CDS = {
    "eq": "relation1",
    "neq": "relation1",
    "lt": "relation1",
    "gt": "relation1",
    "leq": "relation1",
    "geq": "relation1",
    "approx": "relation1",
    "equivalent": "logic1",
    "implies": "logic1",
    "or": "logic1",
    "and": "logic1",
    "not": "logic1",
    "plus": "arith1",
    "minus": "arith1",
    "times": "arith1",
    "divide": "arith1",
    "power": "arith1",
    "root": "arith1",
    "abs": "arith1",
    "factorial": "integer1",
    "real": "complex1",
    "imaginary": "complex1",
    "conjugate": "complex1",
    "sin": "transc1",
    "cos": "transc1",
    "tan": "transc1",
    "exp": "transc1",
    "log": "transc1",
    "ln": "transc1",
    "pi": "nums1",
    "infinity": "nums1",
    "determinant": "linalg1",
    "grad": "veccalc1",
    "partialdiff": "calculus1",
    "in": "set1",
    "subset": "set1",
    "union": "set1",
    "intersect": "set1",
    "sum": "arith1",
    "product": "arith1",
    "int": "calculus1",
    "max": "minmax1",
    "min": "minmax1",
    "tendsto": "limit1",
}

# content dictionary of the notational symbols the contentizer introduces
AMBIGUOUS_CD = "ambiguous"

# internal flags which never leave the contentizer
INTERNAL_ATTRS = ("text", "einstein")


################################################################################
# constructors


def _attrs(kind: str, src: Optional[str], **extra: str):
    attrs = {"kind": kind}

    if src is not None:
        attrs["src"] = src

    attrs.update({k: v for k, v in extra.items() if v is not None})

    return attrs


def ci(name: str, src: Optional[str] = None, **flags: str) -> ExprTree:
    return ExprTree(name, [], _attrs("ci", src, **flags))


def cn(value: str, src: Optional[str] = None) -> ExprTree:
    return ExprTree(value, [], _attrs("cn", src))


def op(name: str, children: List[ExprTree], src: Optional[str] = None) -> ExprTree:
    if name not in OPERATOR_CDS:
        raise ValueError(f"{name=} is not a MathML operator")

    return ExprTree(name, list(children), _attrs("op", src, cd=OPERATOR_CDS[name]))


def csymbol(
    symbol: str,
    cd: str,
    children: List[ExprTree],
    src: Optional[str] = None,
    name: Optional[str] = None,
) -> ExprTree:
    return ExprTree(symbol, list(children), _attrs("csymbol", src, cd=cd, name=name))


def ambiguous(symbol: str, children: List[ExprTree], src: Optional[str] = None):
    return csymbol(symbol, AMBIGUOUS_CD, children, src)


def annotated(
    annotation: SemanticAnnotation,
    children: List[ExprTree],
    src: Optional[str] = None,
) -> ExprTree:
    """
    The node of an annotated symbol: a MathML operator when the annotation
    names one, a csymbol carrying the human label otherwise.
    """
    if annotation.is_mathml_element and annotation.symbol_id in OPERATOR_CDS:
        return op(annotation.symbol_id, children, src)

    return csymbol(
        annotation.symbol_id, annotation.cd, children, src, name=annotation.label
    )


def make_apply(head: ExprTree, args: List[ExprTree]) -> ExprTree:
    """
    Apply `head` to `args`: a leaf head takes the arguments as children,
    a compound head is wrapped into an explicit `apply` node.
    """
    if head.is_leaf:
        return head.replace(children=list(args))

    return ExprTree("apply", [head, *args], {"kind": "apply"})


def is_kind(node: ExprTree, kind: str) -> bool:
    return node.attrs.get("kind") == kind


def strip_internal(tree: ExprTree) -> ExprTree:
    return tree.without_attrs(*INTERNAL_ATTRS)

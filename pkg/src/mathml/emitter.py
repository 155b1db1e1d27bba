################################################################################
#
# Write parallel markup as MathML:
#
#   <math>
#     <semantics>
#       presentation tree
#       <annotation-xml encoding="MathML-Content">content tree</annotation-xml>
#     </semantics>
#   </math>
#
# Every node carries its id, cross-referenced nodes carry the id of their
# counterpart in `xref`. Content trees are written in strict form: the head of
# an application is the first child of <apply>, MathML operators are empty
# elements and all other symbols are csymbols naming their content dictionary.
#
# Author(s): Anonymous
################################################################################

from typing import Dict, Optional

from lxml import etree

from src.mathml.markup import ParallelMarkup
from src.tree import ExprTree

################################################################################
# vocabulary

MATHML_NS = "http://www.w3.org/1998/Math/MathML"

CONTENT_ENCODING = "MathML-Content"

TOKEN_ELEMENTS = frozenset({"mi", "mn", "mo", "mtext", "ms", "slot"})

# labels of presentation nodes which are never tokens
STRUCTURAL_LABELS = frozenset(
    {
        "Row",
        "Fraction",
        "Script",
        "Sqrt",
        "Root",
        "Table",
        "TableRow",
        "TableCell",
        "Fenced",
    }
)

# attributes written without the data- prefix
MATHML_ATTRIBUTES = frozenset({"mathvariant", "open", "close", "separators"})

# content attributes which are structure, not XML attributes
_CONTENT_STRUCTURE = frozenset({"kind", "id", "element", "src"})


def _tag(name: str) -> str:
    return f"{{{MATHML_NS}}}{name}"


def _set_ids(element, node: ExprTree, xrefs: Dict[str, str]):
    node_id = node.attrs.get("id")

    if node_id is None:
        return

    element.set("id", node_id)

    if node_id in xrefs:
        element.set("xref", xrefs[node_id])


################################################################################
# entrypoint


def emit(pm: ParallelMarkup) -> str:
    math = etree.Element(_tag("math"), nsmap={None: MATHML_NS})

    if not pm.is_empty:
        parent = math

        if pm.content is not None:
            parent = etree.SubElement(math, _tag("semantics"))

        parent.append(presentation_element(pm.presentation, pm.xrefs))

        if pm.content is not None:
            annotation = etree.SubElement(
                parent, _tag("annotation-xml"), encoding=CONTENT_ENCODING
            )
            annotation.append(content_element(pm.content, pm.content_xrefs))

    return etree.tostring(math, encoding="unicode", pretty_print=True)


################################################################################
# presentation markup


def presentation_element(node: ExprTree, xrefs: Optional[Dict[str, str]] = None):
    xrefs = xrefs if xrefs is not None else {}
    name = node.attrs.get("element", "mrow")
    element = etree.Element(_tag(name))

    _set_ids(element, node, xrefs)

    for key in sorted(node.attrs):
        if key in ("id", "element"):
            continue

        attribute = key if key in MATHML_ATTRIBUTES else f"data-{key}"
        element.set(attribute, node.attrs[key])

    if node.is_leaf and node.label not in STRUCTURAL_LABELS:
        if node.label:
            element.text = node.label
    else:
        for child in node.children:
            element.append(presentation_element(child, xrefs))

    return element


################################################################################
# content markup


def content_element(node: ExprTree, xrefs: Optional[Dict[str, str]] = None):
    """
    The strict content MathML of `node`. `xrefs` maps content ids to the ids
    of the presentation nodes they stem from.
    """
    xrefs = xrefs if xrefs is not None else {}
    kind = node.attrs.get("kind")

    if kind is None:
        return _generic_element(node, xrefs)

    if kind == "apply":
        element = etree.Element(_tag("apply"))
        _set_ids(element, node, xrefs)

        for child in node.children:
            element.append(content_element(child, xrefs))

    else:
        element = _symbol_element(node, xrefs)

        if node.children:
            head, element = element, etree.Element(_tag("apply"))
            element.append(head)

            for child in node.children:
                element.append(content_element(child, xrefs))

    if "constraint" in node.attrs:
        element.set("constraint", node.attrs["constraint"])

    return element


def _symbol_element(node: ExprTree, xrefs: Dict[str, str]):
    kind = node.attrs["kind"]

    if kind == "op":
        element = etree.Element(_tag(node.label))
    else:
        element = etree.Element(_tag(kind))
        element.text = node.label

    _set_ids(element, node, xrefs)

    if kind == "csymbol":
        for key in ("cd", "name"):
            if key in node.attrs:
                element.set(key, node.attrs[key])

    return element


def _generic_element(node: ExprTree, xrefs: Dict[str, str]):
    element = etree.Element(_tag(node.attrs.get("element", node.label)))
    _set_ids(element, node, xrefs)

    for key in sorted(set(node.attrs) - _CONTENT_STRUCTURE):
        element.set(key, node.attrs[key])

    if node.is_leaf and "element" in node.attrs:
        if node.label:
            element.text = node.label
    else:
        for child in node.children:
            element.append(content_element(child, xrefs))

    return element

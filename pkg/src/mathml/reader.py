################################################################################
#
# Read MathML, our own parallel markup as well as the output of third-party
# converters, into expression trees. Elements without a counterpart in the
# tree vocabulary are kept as generic nodes labeled with their tag.
#
# Author(s): Anonymous
################################################################################

import logging

from typing import Dict, List, Optional, Tuple

from lxml import etree

from src.content.nodes import OPERATOR_CDS, ci, cn, csymbol, op
from src.mathml.emitter import CONTENT_ENCODING, TOKEN_ELEMENTS
from src.mathml.errors import InvalidMarkup, NotMathML, XmlError
from src.mathml.markup import ParallelMarkup, empty_row, node_ids
from src.tree import ExprTree

log = logging.getLogger(__name__)

################################################################################
# vocabulary

ELEMENT_LABELS = {
    "mrow": "Row",
    "mstyle": "Row",
    "mpadded": "Row",
    "mphantom": "Row",
    "mfrac": "Fraction",
    "msqrt": "Sqrt",
    "mroot": "Root",
    "msub": "Script",
    "msup": "Script",
    "msubsup": "Script",
    "munder": "Script",
    "mover": "Script",
    "munderover": "Script",
    "mtable": "Table",
    "mtr": "TableRow",
    "mtd": "TableCell",
    "mfenced": "Fenced",
}

# elements whose children form one inferred row
INFERRED_ROWS = frozenset({"msqrt", "mtd"})

CONTENT_ENCODINGS = frozenset({CONTENT_ENCODING, "application/mathml-content+xml"})

_PARSER = etree.XMLParser(remove_blank_text=True, remove_comments=True)


def _local(name) -> str:
    return etree.QName(name).localname


def _elements(element) -> list:
    return [c for c in element if isinstance(c.tag, str)]


def _load(xml: str):
    try:
        return etree.fromstring(xml.encode("utf-8"), _PARSER)
    except etree.XMLSyntaxError as e:
        raise XmlError(f"malformed XML: {e}") from e


################################################################################
# entrypoints


def parse_mathml(xml: str, strict: bool = True) -> ParallelMarkup:
    """
    Read a MathML document into parallel markup. The content tree is read
    from an `annotation-xml` in content encoding when there is one. Markup
    from other tools may reuse ids or point xrefs nowhere; with `strict` unset
    such cross references are dropped instead of raising InvalidMarkup.
    """
    root = _load(xml)

    if _local(root) != "math":
        raise NotMathML(f"root element is {_local(root)!r}, expected 'math'")

    reader = _Reader()
    children = _elements(root)
    content = None

    if len(children) == 1 and _local(children[0]) == "semantics":
        parts = _elements(children[0])
        shown = [p for p in parts if _local(p) not in ("annotation", "annotation-xml")]
        presentation = reader.presentation_row(shown)

        for part in parts:
            encoding = part.get("encoding")

            if _local(part) == "annotation-xml" and encoding in CONTENT_ENCODINGS:
                inner = _elements(part)
                content = reader.content(inner[0]) if inner else None
                break

    else:
        presentation = reader.presentation_row(children)

    xrefs = reader.xrefs(presentation, content, strict)

    if strict:
        return ParallelMarkup(presentation, content, xrefs)

    return ParallelMarkup(presentation, content, xrefs, check=False)


def parse_generic_xml(xml: str) -> ExprTree:
    """
    Read arbitrary XML, e.g. the tree export of a tagger, as a tree labeled
    with element names. Text becomes leaf children.
    """
    return _generic(_load(xml))


def _generic(element) -> ExprTree:
    children = []

    if element.text and element.text.strip():
        children.append(ExprTree.leaf(element.text.strip()))

    for child in _elements(element):
        children.append(_generic(child))

        if child.tail and child.tail.strip():
            children.append(ExprTree.leaf(child.tail.strip()))

    return ExprTree(_local(element), children)


################################################################################
# the reader


class _Reader:
    def __init__(self):
        # (own id, xref) pairs of both trees
        self.presentation_refs: List[Tuple[str, str]] = []
        self.content_refs: List[Tuple[str, str]] = []

    def attributes(self, element, refs: List[Tuple[str, str]]) -> Dict[str, str]:
        attrs = {}

        for key, value in element.attrib.items():
            name = _local(key)

            if name == "xref":
                continue
            if name.startswith("data-"):
                name = name[len("data-") :]

            attrs[name] = value

        if "id" in attrs and element.get("xref") is not None:
            refs.append((attrs["id"], element.get("xref")))

        return attrs

    ############################################################################
    # presentation

    def presentation_row(self, elements: list) -> ExprTree:
        if not elements:
            return empty_row()
        if len(elements) == 1:
            return self.presentation(elements[0])

        return ExprTree(
            "Row", [self.presentation(e) for e in elements], {"element": "mrow"}
        )

    def presentation(self, element) -> ExprTree:
        name = _local(element)
        attrs = {"element": name, **self.attributes(element, self.presentation_refs)}
        children = _elements(element)

        if name in TOKEN_ELEMENTS:
            text = element.text or ""
            return ExprTree(text if name == "mtext" else text.strip(), [], attrs)

        if name in INFERRED_ROWS and len(children) != 1:
            row = self.presentation_row(children)
            return ExprTree(ELEMENT_LABELS[name], [row], attrs)

        if name in ELEMENT_LABELS:
            label = ELEMENT_LABELS[name]
        elif not children:
            # unknown element without structure
            return ExprTree((element.text or "").strip(), [], attrs)
        else:
            label = name

        return ExprTree(label, [self.presentation(c) for c in children], attrs)

    ############################################################################
    # content

    def content(self, element) -> ExprTree:
        name = _local(element)
        children = _elements(element)

        if name == "apply":
            return self.application(element, children)

        attrs = self.attributes(element, self.content_refs)
        text = (element.text or "").strip()

        if name == "ci":
            node = ci(text)
        elif name == "cn":
            node = cn(text)
        elif name == "csymbol":
            node = csymbol(text, attrs.get("cd"), [], name=attrs.get("name"))
        elif not children and not text and name in OPERATOR_CDS:
            node = op(name, [])
        elif not children and not text:
            node = ExprTree(name, [], {"kind": "op"})
        else:
            return self.generic_content(element, name, attrs, children, text)

        for key in ("id", "constraint"):
            if key in attrs:
                node.attrs[key] = attrs[key]

        return node

    def application(self, element, children: list) -> ExprTree:
        if not children:
            raise InvalidMarkup("<apply> without a head")

        attrs = self.attributes(element, self.content_refs)
        head, *args = children
        args = [self.content(a) for a in args]

        if _local(head) == "apply" or _elements(head):
            # compound head
            node = ExprTree("apply", [self.content(head), *args], {"kind": "apply"})

            if "id" in attrs:
                node.attrs["id"] = attrs["id"]
        else:
            node = self.content(head)
            node.children = args

        if "constraint" in attrs:
            node.attrs["constraint"] = attrs["constraint"]

        return node

    def generic_content(self, element, name, attrs, children, text) -> ExprTree:
        attrs = {"element": name, **attrs}

        if not children:
            return ExprTree(text, [], attrs)

        return ExprTree(name, [self.content(c) for c in children], attrs)

    ############################################################################
    # cross references

    def xrefs(
        self, presentation: ExprTree, content: Optional[ExprTree], strict: bool
    ) -> Dict[str, str]:
        """
        Presentation id -> content id, from the xrefs of both trees.
        """
        pairs = list(self.presentation_refs)
        pairs += [(p, c) for c, p in self.content_refs]

        if strict:
            xrefs: Dict[str, str] = {}

            for p, c in pairs:
                if xrefs.setdefault(p, c) != c:
                    raise InvalidMarkup(
                        f"presentation node {p!r} refers to both "
                        f"{xrefs[p]!r} and {c!r}"
                    )

            return xrefs

        presentation_ids = set(node_ids(presentation))
        content_ids = set(node_ids(content))
        xrefs = {}

        for p, c in pairs:
            if p in presentation_ids and c in content_ids and p not in xrefs:
                if c not in xrefs.values():
                    xrefs[p] = c

        dropped = len(set(pairs)) - len(xrefs)
        if dropped > 0:
            log.debug(f"dropped {dropped} unusable cross references")

        return xrefs

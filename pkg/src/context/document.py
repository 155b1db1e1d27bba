################################################################################
#
# The textual context of a formula: running text with inline formulae, either
# written as plain text with `$...$` math or as XHTML with <math> elements.
#
# Author(s): Anonymous
################################################################################

import re

from dataclasses import dataclass, field
from typing import List, Optional

from lxml import etree

################################################################################
# the document


INLINE_MATH = re.compile(r"\$([^$]+)\$")

TEX_ENCODINGS = frozenset({"application/x-tex", "application/x-latex", "TeX"})

# XHTML elements which separate words
BLOCK_TAGS = frozenset(
    {"p", "div", "br", "li", "td", "th", "tr", "h1", "h2", "h3", "h4", "section"}
)


@dataclass(frozen=True)
class Formula:
    # character offset into the document text
    position: int

    tex: str


@dataclass
class ContextDocument:
    # running text, inline formulae written as `$tex$`
    text: str

    formulae: List[Formula] = field(default_factory=list)

    # the formula which is being converted
    target_index: int = 0

    def __post_init__(self):
        if self.formulae and not 0 <= self.target_index < len(self.formulae):
            raise ValueError(
                f"{self.target_index=} out of range for {len(self.formulae)} formulae"
            )
        if not self.formulae and self.target_index != 0:
            raise ValueError(f"{self.target_index=} given but document has no formula")

        positions = [f.position for f in self.formulae]

        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ValueError(f"formula positions must increase, got {positions=}")

    @property
    def target(self) -> Optional[Formula]:
        return self.formulae[self.target_index] if self.formulae else None

    @property
    def has_text(self) -> bool:
        return bool(INLINE_MATH.sub(" ", self.text).strip())

    ############################################################################
    # construction

    @classmethod
    def from_text(
        cls,
        text: str,
        target: Optional[str] = None,
        target_index: Optional[int] = None,
    ) -> "ContextDocument":
        """
        Read plain text with inline `$...$` formulae. A `target` formula which
        does not occur in the text is placed right after it.
        """
        formulae = [
            Formula(m.start(), m.group(1).strip()) for m in INLINE_MATH.finditer(text)
        ]

        if target is not None:
            target = target.strip()
            matches = [i for i, f in enumerate(formulae) if f.tex == target]

            if matches:
                target_index = matches[0]
            else:
                formulae.append(Formula(len(text), target))
                target_index = len(formulae) - 1

        return cls(text, formulae, target_index or 0)

    @classmethod
    def from_xhtml(
        cls,
        xhtml: str,
        target: Optional[str] = None,
        target_index: Optional[int] = None,
    ) -> "ContextDocument":
        """
        Read XHTML whose <math> elements carry their TeX source in `alttext` or
        in a TeX annotation. Every math element becomes an inline formula.
        """
        parser = etree.XMLParser(recover=True, remove_comments=True)
        root = etree.fromstring(xhtml.encode("utf-8"), parser)

        if root is None:
            return cls("", [], 0) if target is None else cls.from_text("", target)

        parts: List[str] = []
        _flatten(root, parts)
        text = re.sub(r"\s+", " ", "".join(parts)).strip()

        return cls.from_text(text, target, target_index)


################################################################################
# XHTML flattening


def _local(element) -> str:
    return etree.QName(element).localname


def _math_tex(math) -> str:
    alttext = math.get("alttext")

    if alttext:
        return alttext

    for element in math.iter():
        if not isinstance(element.tag, str) or _local(element) != "annotation":
            continue

        if element.get("encoding") in TEX_ENCODINGS and element.text:
            return element.text

    # no source available, fall back to the rendered characters
    return "".join(math.itertext())


def _flatten(element, parts: List[str]):
    name = _local(element)

    if name == "math":
        tex = _math_tex(element).replace("$", "").strip()
        parts.append(f" ${tex}$ " if tex else " ")

    else:
        if name in BLOCK_TAGS:
            parts.append(" ")
        if element.text:
            parts.append(element.text)

        for child in element:
            if isinstance(child.tag, str):
                _flatten(child, parts)
            elif child.tail:
                parts.append(child.tail)

        if name in BLOCK_TAGS:
            parts.append(" ")

    if element.tail:
        parts.append(element.tail)

################################################################################
#
# Bindings of tokens to content-dictionary symbols. A binding names the content
# dictionary (the MathML default dictionaries, the DLMF macro set or the
# offline Wikidata dictionary) and the symbol within it.
#
# Author(s): Anonymous
################################################################################

import re

from dataclasses import dataclass
from enum import Enum
from typing import Optional

################################################################################
# roles a token can play in a formula


class Role(str, Enum):
    identifier = "identifier"
    function = "function"
    operator = "operator"
    constant = "constant"

    @property
    def is_applicable(self) -> bool:
        # functions and operators take the following operand as argument
        return self in (Role.function, Role.operator)


################################################################################
# the annotation itself

WIKIDATA_CD = "wikidata"

_QID_PATTERN = re.compile(r"^Q[0-9]+$")

# content dictionaries of the MathML default vocabulary
MATHML_CDS = frozenset(
    {
        "arith1",
        "relation1",
        "logic1",
        "transc1",
        "complex1",
        "nums1",
        "linalg1",
        "veccalc1",
        "calculus1",
        "set1",
        "integer1",
        "rounding1",
    }
)

# MathML content symbols which have their own empty element, e.g. <eq/>
MATHML_ELEMENTS = frozenset(
    {
        "eq",
        "neq",
        "lt",
        "gt",
        "leq",
        "geq",
        "approx",
        "equivalent",
        "implies",
        "or",
        "and",
        "not",
        "plus",
        "minus",
        "times",
        "divide",
        "power",
        "root",
        "abs",
        "factorial",
        "real",
        "imaginary",
        "conjugate",
        "sin",
        "cos",
        "tan",
        "exp",
        "log",
        "ln",
        "pi",
        "infinity",
        "determinant",
        "grad",
        "partialdiff",
        "in",
        "subset",
        "union",
        "intersect",
        "sum",
        "product",
        "int",
        "max",
        "min",
        "tendsto",
    }
)


@dataclass(frozen=True)
class SemanticAnnotation:
    # content dictionary, e.g. "wikidata" or "arith1"
    cd: str

    # symbol within the dictionary, e.g. "Q187235" or "plus"
    symbol_id: str

    # human readable name
    label: str

    description: Optional[str] = None

    def __post_init__(self):
        if not self.cd:
            raise ValueError(f"content dictionary must be non-empty, got {self.cd=}")
        if not self.symbol_id:
            raise ValueError(f"symbol id must be non-empty, got {self.symbol_id=}")
        if self.cd == WIKIDATA_CD and _QID_PATTERN.match(self.symbol_id) is None:
            raise ValueError(
                f"wikidata symbols are QIDs (Q followed by digits), "
                f"got {self.symbol_id=}"
            )

    @property
    def is_mathml_element(self) -> bool:
        return self.cd in MATHML_CDS and self.symbol_id in MATHML_ELEMENTS


@dataclass(frozen=True)
class Reading:
    """
    One context-free interpretation of a lexeme.
    """

    role: Role
    annotation: Optional[SemanticAnnotation] = None

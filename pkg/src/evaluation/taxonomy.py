################################################################################
#
# A hierarchy of mathematical symbol classes. Two symbols are taxonomically
# close when their classes share a near common ancestor. The same machinery
# orders the data types of expression nodes.
#
# The yaml file holds one nested mapping per hierarchy. A class is a mapping of
# its subclasses or a list of the symbols it contains; a class with both lists
# its own symbols under the key `symbols`.
#
# Author(s): Anonymous
################################################################################

import functools
import pathlib

from dataclasses import dataclass
from typing import Dict, List, Optional

from omegaconf import OmegaConf

from src.resources import TAXONOMY_FILE, resource_path
from src.tree import ExprTree

SYMBOLS_KEY = "symbols"

################################################################################
# the hierarchy


@dataclass(frozen=True)
class TaxonomyNode:
    name: str
    parent: Optional["TaxonomyNode"] = None

    def ancestors(self) -> List["TaxonomyNode"]:
        """
        This class followed by its ancestors up to the root.
        """
        chain = [self]

        while chain[-1].parent is not None:
            chain.append(chain[-1].parent)

        return chain

    @property
    def depth(self) -> int:
        return len(self.ancestors()) - 1


class Taxonomy:
    def __init__(self, classes: Dict[str, TaxonomyNode], symbols: Dict[str, str]):
        self.classes = classes

        # symbol -> name of its class
        self.symbols = symbols

        for symbol, name in symbols.items():
            if name not in classes:
                raise ValueError(f"{symbol=} belongs to unknown class {name=}")

    @classmethod
    def from_mapping(cls, mapping: dict) -> "Taxonomy":
        if len(mapping) != 1:
            raise ValueError(f"a taxonomy has one root class, got {list(mapping)}")

        classes: Dict[str, TaxonomyNode] = {}
        symbols: Dict[str, str] = {}

        def add(name: str, body, parent: Optional[TaxonomyNode]):
            if name in classes:
                raise ValueError(f"class {name=} occurs twice")

            node = TaxonomyNode(name, parent)
            classes[name] = node

            if body is None:
                return
            if isinstance(body, (list, tuple)):
                body = {SYMBOLS_KEY: body}

            for key, value in body.items():
                if key != SYMBOLS_KEY:
                    add(key, value, node)
                    continue

                for symbol in value:
                    symbol = str(symbol)

                    if symbol in symbols:
                        raise ValueError(f"{symbol=} is listed twice")

                    symbols[symbol] = name

        root, body = next(iter(mapping.items()))
        add(root, body, None)

        return cls(classes, symbols)

    @property
    def height(self) -> int:
        return max(node.depth for node in self.classes.values())

    def class_of(self, symbol: str) -> Optional[TaxonomyNode]:
        name = self.symbols.get(symbol)

        return None if name is None else self.classes[name]

    def class_distance(self, a: Optional[TaxonomyNode], b: Optional[TaxonomyNode]):
        """
        Length of the path between two classes through their nearest common
        ancestor, relative to the height of the taxonomy and capped at 1.
        Unknown classes are at distance 1 to everything.
        """
        if a is None or b is None:
            return 1.0
        if a == b:
            return 0.0

        ancestors_a = a.ancestors()
        ancestors_b = b.ancestors()

        common = next(n for n in ancestors_a if n in ancestors_b)
        path = ancestors_a.index(common) + ancestors_b.index(common)

        return min(1.0, path / max(self.height, 1))

    def distance(self, x: str, y: str) -> float:
        return self.class_distance(self.class_of(x), self.class_of(y))

    def __len__(self) -> int:
        return len(self.classes)


def load_taxonomy(path: pathlib.Path, section: str = "symbols") -> Taxonomy:
    cfg = OmegaConf.to_container(OmegaConf.load(str(path)), resolve=True)

    if section not in cfg:
        raise ValueError(f"{path} has no taxonomy named {section=}")

    return Taxonomy.from_mapping(cfg[section])


@functools.lru_cache(maxsize=None)
def default_taxonomy() -> Taxonomy:
    return load_taxonomy(resource_path(TAXONOMY_FILE), "symbols")


@functools.lru_cache(maxsize=None)
def default_type_taxonomy() -> Taxonomy:
    return load_taxonomy(resource_path(TAXONOMY_FILE), "types")


################################################################################
# classifying tree nodes


def symbol_of(node: ExprTree) -> str:
    """
    The taxonomy key of a node: the symbol name of operators and content
    dictionary symbols, the node kind of identifiers and numbers.
    """
    kind = node.attrs.get("kind")

    if kind in ("ci", "cn", "apply"):
        return kind
    if kind is not None:
        return node.label

    element = node.attrs.get("element")

    if element == "mi":
        return "ci"
    if element == "mn":
        return "cn"

    return node.label


def type_of(node: ExprTree, tax: Optional[Taxonomy] = None) -> Optional[str]:
    """
    The data type of a node: identifier, integer, real, function, operator
    or relation.
    """
    tax = tax if tax is not None else default_taxonomy()
    symbol = symbol_of(node)

    if symbol == "cn":
        return "integer" if node.label.isdigit() else "real"
    if symbol == "apply":
        return "function"
    if symbol == "ci":
        return "function" if node.children else "identifier"

    cls = tax.class_of(symbol)
    groups = {c.name for c in cls.ancestors()} if cls is not None else set()

    if "relation" in groups or node.attrs.get("name") == "relation":
        return "relation"
    if "constant" in groups:
        return "real"
    if "function" in groups:
        return "function"
    if cls is not None or node.children:
        return "operator"
    if node.attrs.get("kind") is not None:
        return "identifier"

    return None


################################################################################
# distances


def taxonomic_distance(
    x: ExprTree, y: ExprTree, tax: Optional[Taxonomy] = None
) -> float:
    tax = tax if tax is not None else default_taxonomy()

    return tax.distance(symbol_of(x), symbol_of(y))


def data_type_distance(
    x: ExprTree,
    y: ExprTree,
    tax: Optional[Taxonomy] = None,
    types: Optional[Taxonomy] = None,
) -> float:
    """
    Taxonomic distance between the data types of two nodes.
    """
    types = types if types is not None else default_type_taxonomy()
    type_x, type_y = type_of(x, tax), type_of(y, tax)

    return types.class_distance(
        None if type_x is None else types.classes.get(type_x),
        None if type_y is None else types.classes.get(type_y),
    )

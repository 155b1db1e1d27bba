################################################################################
#
# Parallel markup: a presentation tree and a content tree whose nodes refer to
# each other by id.
#
# Author(s): Anonymous
################################################################################

from dataclasses import InitVar, dataclass, field
from typing import Dict, List, Optional

from src.mathml.errors import InvalidMarkup
from src.tree import ExprTree, has_ids, number_nodes

################################################################################
# the markup


def empty_row() -> ExprTree:
    return ExprTree("Row", [], {"element": "mrow"})


def node_ids(tree: Optional[ExprTree]) -> List[str]:
    if tree is None:
        return []

    return [n.attrs["id"] for n in tree.preorder() if "id" in n.attrs]


@dataclass
class ParallelMarkup:
    presentation: ExprTree = field(default_factory=empty_row)

    content: Optional[ExprTree] = None

    # presentation id -> content id
    xrefs: Dict[str, str] = field(default_factory=dict)

    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        if check:
            self.validate()

    def validate(self):
        presentation_ids = node_ids(self.presentation)
        content_ids = node_ids(self.content)

        for name, ids in (("presentation", presentation_ids), ("content", content_ids)):
            if len(set(ids)) != len(ids):
                duplicates = sorted({i for i in ids if ids.count(i) > 1})
                raise InvalidMarkup(f"duplicate {name} ids {duplicates}")

        missing = [
            (p, c)
            for p, c in self.xrefs.items()
            if p not in presentation_ids or c not in content_ids
        ]
        if missing:
            raise InvalidMarkup(f"cross references to unknown ids {missing}")

        if len(set(self.xrefs.values())) != len(self.xrefs):
            raise InvalidMarkup(f"cross references are not injective: {self.xrefs=}")

    @property
    def is_empty(self) -> bool:
        return (
            self.presentation.is_layout
            and self.presentation.is_leaf
            and self.content is None
        )

    @property
    def content_xrefs(self) -> Dict[str, str]:
        """
        The cross references seen from the content side: content id ->
        presentation id.
        """
        return {c: p for p, c in self.xrefs.items()}

    def content_of(self, presentation_id: str) -> Optional[str]:
        return self.xrefs.get(presentation_id)

    def presentation_of(self, content_id: str) -> Optional[str]:
        return self.content_xrefs.get(content_id)


################################################################################
# combining a presentation tree with its content tree


def build_parallel_markup(
    presentation: ExprTree, content: Optional[ExprTree] = None
) -> ParallelMarkup:
    """
    Combine a presentation tree with the content tree derived from it. Nodes
    are numbered in pre-order, presentation first. Content nodes referring to
    their presentation node with a `src` attribute become cross references;
    when several content nodes stem from the same presentation node, the first
    one in pre-order keeps the reference.
    """
    if not has_ids(presentation):
        presentation, _ = number_nodes(presentation)

    if content is None:
        return ParallelMarkup(presentation)

    presentation_ids = set(node_ids(presentation))
    next_id = max((int(i) for i in presentation_ids if i.isdigit()), default=0) + 1

    content, _ = number_nodes(content, start=next_id)
    xrefs: Dict[str, str] = {}

    for node in content.preorder():
        src = node.attrs.pop("src", None)

        if src in presentation_ids and src not in xrefs:
            xrefs[src] = node.attrs["id"]

    return ParallelMarkup(presentation, content, xrefs)

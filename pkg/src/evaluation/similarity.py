################################################################################
#
# Similarity measures between a query formula and a candidate formula which
# complement the tree edit distance.
#
# Author(s): Anonymous
################################################################################

from collections import Counter
from typing import Dict, Optional

from src.evaluation.cost_model import CostModel
from src.evaluation.errors import EmptyQuery
from src.evaluation.taxonomy import Taxonomy, taxonomic_distance
from src.evaluation.ted import ted_mapping
from src.tree import ExprTree

################################################################################
# nesting depth


def _depths(tree: ExprTree) -> Dict[int, int]:
    return {id(node): depth for node, depth in tree.walk()}


def match_depth(match_node: ExprTree, tree: ExprTree) -> float:
    """
    Weight of a match with `match_node`: 1 at the root, halved with every
    level of nesting.
    """
    depth = _depths(tree).get(id(match_node))

    if depth is None:
        raise ValueError(f"{match_node} is not a node of {tree}")

    return 2.0**-depth


def match_depth_score(
    query: ExprTree, candidate: ExprTree, cm: Optional[CostModel] = None
) -> float:
    """
    The depth weights of the query nodes aligned with an equally labeled
    candidate node, relative to the depth weights of all query nodes.
    """
    depths = _depths(query)

    def weight(node: ExprTree) -> float:
        return 2.0 ** -depths[id(node)]

    total = sum(weight(n) for n in query.preorder())
    matched = sum(
        weight(q)
        for q, c in ted_mapping(query, candidate, cm)
        if q is not None and c is not None and q.label == c.label
    )

    return matched / total


################################################################################
# bag of tokens


def tokens(tree: ExprTree) -> Counter:
    return Counter(leaf.label for leaf in tree.leaves())


def query_coverage(a: ExprTree, b: ExprTree) -> float:
    """
    The share of the query's leaf tokens which also occur in `b`, counted
    with multiplicity.
    """
    query = tokens(a)
    size = sum(query.values())

    if size == 0:
        raise EmptyQuery(f"query {a} has no tokens")

    return sum((query & tokens(b)).values()) / size


################################################################################
# taxonomy


def mean_taxonomic_distance(
    a: ExprTree,
    b: ExprTree,
    tax: Optional[Taxonomy] = None,
    cm: Optional[CostModel] = None,
) -> float:
    """
    Mean taxonomic distance over the node pairs aligned by the edit mapping.
    Trees without aligned nodes are at the maximal distance 1.
    """
    pairs = [
        (x, y) for x, y in ted_mapping(a, b, cm) if x is not None and y is not None
    ]

    if not pairs:
        return 1.0

    return sum(taxonomic_distance(x, y, tax) for x, y in pairs) / len(pairs)

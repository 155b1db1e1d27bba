################################################################################
#
# Ordered tree edit distance between expression trees, computed with APTED,
# optionally shortened by shortcut rules.
#
# Author(s): Anonymous
################################################################################

import logging

from typing import Iterable, List, Optional, Tuple

from apted import APTED, Config

from src.evaluation.cost_model import CostModel
from src.evaluation.errors import InvalidCostModel
from src.evaluation.shortcuts import ShortcutRule, default_equivalences, rewrites
from src.tree import ExprTree

log = logging.getLogger(__name__)

Mapping = List[Tuple[Optional[ExprTree], Optional[ExprTree]]]

################################################################################
# apted configuration


class ExprTreeConfig(Config):
    def __init__(self, cm: CostModel):
        self.cm = cm

    def delete(self, node: ExprTree) -> float:
        return self.cm.delete

    def insert(self, node: ExprTree) -> float:
        return self.cm.insert

    def rename(self, node1: ExprTree, node2: ExprTree) -> float:
        return 0 if node1.label == node2.label else self.cm.rename

    def children(self, node: ExprTree) -> List[ExprTree]:
        return node.children


def _plain_ted(a: ExprTree, b: ExprTree, cm: CostModel) -> float:
    return float(APTED(a, b, ExprTreeConfig(cm)).compute_edit_distance())


################################################################################
# distances


def ted(
    a: ExprTree,
    b: ExprTree,
    cm: Optional[CostModel] = None,
    rules: Iterable[ShortcutRule] = (),
) -> float:
    """
    The cheapest way to turn `a` into `b` with node insertions, deletions and
    renames. Each side may additionally be rewritten once by a shortcut rule
    before editing, paying the price of the rule.
    """
    cm = cm if cm is not None else CostModel()
    rules = list(rules)

    if rules and not cm.shortcuts_enabled:
        raise InvalidCostModel(f"shortcut rules given but disabled in {cm=}")

    best = _plain_ted(a, b, cm)

    if not rules or best == 0:
        return best

    left = [(0.0, a), *rewrites(a, rules, cm.shortcut)]
    right = [(0.0, b), *rewrites(b, rules, cm.shortcut)]

    log.debug(f"trying {len(left)} x {len(right)} rewritten tree pairs")

    for cost_a, tree_a in left:
        for cost_b, tree_b in right:
            if cost_a + cost_b >= best:
                continue

            best = min(best, cost_a + cost_b + _plain_ted(tree_a, tree_b, cm))

    return best


def structural_ted(a: ExprTree, b: ExprTree) -> float:
    """
    Label-blind distance: insertions and deletions cost 1, renames are free.
    """
    return ted(a, b, CostModel.structural())


def ted_mapping(a: ExprTree, b: ExprTree, cm: Optional[CostModel] = None) -> Mapping:
    """
    The node alignment of an optimal edit script without shortcuts. Deleted
    nodes of `a` are paired with None, inserted nodes of `b` as well.
    """
    cm = cm if cm is not None else CostModel()

    apted = APTED(a, b, ExprTreeConfig(cm))
    apted.compute_edit_distance()

    return list(apted.compute_edit_mapping())


def equivalence_zero_check(
    a: ExprTree,
    b: ExprTree,
    rules: Optional[Iterable[ShortcutRule]] = None,
    cm: Optional[CostModel] = None,
    tol: float = 1e-9,
) -> bool:
    """
    Whether `a` and `b` are at distance zero once the equivalence rules may
    rewrite each of them.
    """
    rules = default_equivalences() if rules is None else list(rules)
    cm = cm if cm is not None else CostModel.with_shortcuts()

    return ted(a, b, cm, rules) <= tol

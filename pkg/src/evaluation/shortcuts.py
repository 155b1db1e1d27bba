################################################################################
#
# Shortcut rules: priced rewrites between equivalent subtrees, written as a
# pair of bracket tree templates whose `?name` leaves are variables, e.g.
#
#   {divide{?x}{?y}} = {times{?x}{power{?y}{minus{1}}}} ; 0.5
#
# A rule file holds one rule per line. The price after `;` is optional, rules
# without one cost the shortcut price of the cost model. `#` starts a comment.
#
# Author(s): Anonymous
################################################################################

import functools
import logging
import pathlib

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Set, Tuple

from src.evaluation.errors import RuleFormatError
from src.resources import EQUIVALENCE_FILE, SHORTCUT_FILE, resource_path
from src.tree import ExprTree, from_bracket

log = logging.getLogger(__name__)

VARIABLE_PREFIX = "?"

Bindings = Dict[str, ExprTree]

################################################################################
# patterns


def is_variable(node: ExprTree) -> bool:
    return node.label.startswith(VARIABLE_PREFIX) and len(node.label) > 1


def variables(pattern: ExprTree) -> Set[str]:
    return {n.label for n in pattern.preorder() if is_variable(n)}


def match(pattern: ExprTree, node: ExprTree, bindings: Bindings) -> bool:
    """
    Match `node` against `pattern`, extending `bindings` in place. A variable
    occurring twice must bind equal subtrees.
    """
    if is_variable(pattern):
        bound = bindings.get(pattern.label)

        if bound is None:
            bindings[pattern.label] = node
            return True

        return bound.same_shape(node)

    if pattern.label != node.label or len(pattern.children) != len(node.children):
        return False

    return all(match(p, n, bindings) for p, n in zip(pattern.children, node.children))


def instantiate(pattern: ExprTree, bindings: Bindings) -> ExprTree:
    if is_variable(pattern):
        return bindings[pattern.label].copy()

    return ExprTree(pattern.label, [instantiate(c, bindings) for c in pattern.children])


################################################################################
# rules


@dataclass(frozen=True)
class ShortcutRule:
    lhs: ExprTree
    rhs: ExprTree

    # None prices the rule with the shortcut cost of the cost model
    cost: Optional[float] = None

    def __post_init__(self):
        for side in (self.lhs, self.rhs):
            for node in side.preorder():
                if is_variable(node) and not node.is_leaf:
                    raise ValueError(f"variable {node.label} must be a leaf")

        if variables(self.lhs) != variables(self.rhs):
            raise ValueError(
                f"both sides must bind the same variables, "
                f"{sorted(variables(self.lhs))} != {sorted(variables(self.rhs))}"
            )

        if self.cost is not None and self.cost < 0:
            raise ValueError(f"rule cost must be non-negative, {self.cost=}")

    @classmethod
    def from_text(cls, lhs: str, rhs: str, cost: Optional[float] = None):
        return cls(from_bracket(lhs), from_bracket(rhs), cost)

    def directions(self) -> Iterator[Tuple[ExprTree, ExprTree]]:
        yield self.lhs, self.rhs
        yield self.rhs, self.lhs

    def __str__(self) -> str:
        rule = f"{self.lhs} = {self.rhs}"

        return rule if self.cost is None else f"{rule} ; {self.cost:g}"


################################################################################
# rewriting


def _replace_at(tree: ExprTree, path: Tuple[int, ...], new: ExprTree) -> ExprTree:
    if not path:
        return new

    head, *rest = path
    children = list(tree.children)
    children[head] = _replace_at(children[head], tuple(rest), new)

    return tree.replace(children=children)


def _positions(
    tree: ExprTree, path: Tuple[int, ...] = ()
) -> Iterator[Tuple[Tuple[int, ...], ExprTree]]:
    yield path, tree

    for i, child in enumerate(tree.children):
        yield from _positions(child, path + (i,))


def rewrites(
    tree: ExprTree, rules: List[ShortcutRule], default_cost: float
) -> Iterator[Tuple[float, ExprTree]]:
    """
    Every tree reachable from `tree` by applying one rule once, in either
    direction and at any position, together with the price of the rewrite.
    """
    for path, node in _positions(tree):
        for rule in rules:
            cost = default_cost if rule.cost is None else rule.cost

            for source, target in rule.directions():
                bindings: Bindings = {}

                if match(source, node, bindings):
                    yield cost, _replace_at(tree, path, instantiate(target, bindings))


################################################################################
# rule files


def _split_rule(line: str) -> Tuple[str, str, Optional[str]]:
    # split at `=` and `;` outside of braces
    depth = 0
    escaped = False
    cuts = []

    for i, char in enumerate(line):
        if escaped:
            escaped = False
        elif char == "\\":
            escaped = True
        elif char == "{":
            depth += 1
        elif char == "}":
            depth -= 1
        elif depth == 0 and char in "=;":
            cuts.append((i, char))

    separators = "".join(c for _, c in cuts)

    if separators not in ("=", "=;"):
        raise ValueError(f"expected `lhs = rhs` or `lhs = rhs ; cost`, got {line=}")

    equals = cuts[0][0]
    end = cuts[1][0] if len(cuts) > 1 else len(line)
    cost = line[end + 1 :].strip() if len(cuts) > 1 else None

    return line[:equals].strip(), line[equals + 1 : end].strip(), cost


def parse_rules(text: str) -> List[ShortcutRule]:
    rules = []

    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()

        if not line:
            continue

        try:
            lhs, rhs, cost = _split_rule(line)
            rule = ShortcutRule.from_text(
                lhs, rhs, float(cost) if cost is not None else None
            )
        except ValueError as e:
            raise RuleFormatError(line_number, str(e)) from e

        rules.append(rule)

    return rules


def load_rules(path: pathlib.Path) -> List[ShortcutRule]:
    rules = parse_rules(pathlib.Path(path).read_text(encoding="utf-8"))
    log.debug(f"loaded {len(rules)} shortcut rules from {path}")

    return rules


@functools.lru_cache(maxsize=None)
def _bundled(name: str) -> Tuple[ShortcutRule, ...]:
    return tuple(load_rules(resource_path(name)))


def default_shortcuts() -> List[ShortcutRule]:
    return list(_bundled(SHORTCUT_FILE))


def default_equivalences() -> List[ShortcutRule]:
    return list(_bundled(EQUIVALENCE_FILE))

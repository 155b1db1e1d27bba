################################################################################
#
# Tests of the tree edit distance, its cost model and the shortcut rules.
#
# Author(s): Anonymous
################################################################################

import functools
import random

import pytest

from src.evaluation import (
    CostModel,
    InvalidCostModel,
    RuleFormatError,
    ShortcutRule,
    default_equivalences,
    default_shortcuts,
    equivalence_zero_check,
    parse_rules,
    structural_ted,
    ted,
    ted_mapping,
)
from src.tree import ExprTree, from_bracket

DIVIDE = from_bracket("{divide{a}{b}}")
INVERSE = from_bracket("{times{a}{power{b}{minus{1}}}}")

################################################################################
# a reference implementation on forests


def _frozen(tree: ExprTree):
    return tree.label, tuple(_frozen(c) for c in tree.children)


def _forest_size(forest) -> int:
    return sum(1 + _forest_size(children) for _, children in forest)


@functools.lru_cache(maxsize=None)
def _reference(f, g, insert, delete, rename) -> float:
    if not f and not g:
        return 0.0
    if not f:
        return insert * _forest_size(g)
    if not g:
        return delete * _forest_size(f)

    (v_label, v_children), (w_label, w_children) = f[-1], g[-1]

    return min(
        _reference(f[:-1] + v_children, g, insert, delete, rename) + delete,
        _reference(f, g[:-1] + w_children, insert, delete, rename) + insert,
        _reference(f[:-1], g[:-1], insert, delete, rename)
        + _reference(v_children, w_children, insert, delete, rename)
        + (0 if v_label == w_label else rename),
    )


def reference_ted(a: ExprTree, b: ExprTree, cm: CostModel) -> float:
    return _reference(
        (_frozen(a),), (_frozen(b),), cm.insert, cm.delete, cm.rename
    )


def random_tree(rng: random.Random, size: int) -> ExprTree:
    nodes = [ExprTree(rng.choice("abc"))]

    for _ in range(size - 1):
        parent = rng.choice(nodes)
        child = ExprTree(rng.choice("abc"))
        parent.children.insert(rng.randint(0, len(parent.children)), child)
        nodes.append(child)

    return nodes[0]


################################################################################
# cost model


def test_cost_model_presets():
    assert CostModel.structural().rename == 0
    assert CostModel.with_shortcuts().shortcuts_enabled
    assert CostModel().tag == "i1-d1-r1-e0.5"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"insert": -1},
        {"rename": -0.5},
        {"rename": 1, "shortcut": 0.5, "shortcuts_enabled": True},
        {"rename": 0.5, "shortcut": 0.75, "shortcuts_enabled": True},
    ],
)
def test_invalid_cost_model(kwargs):
    with pytest.raises(InvalidCostModel):
        CostModel(**kwargs)


def test_parse_costs():
    assert CostModel.parse("1,1,0") == CostModel.structural()

    cm = CostModel.parse("1,1,0.75,0.5")
    assert cm.shortcuts_enabled
    assert cm.shortcut == 0.5

    for costs in ("1,1", "a,b,c", "1,1,1,1,1"):
        with pytest.raises(InvalidCostModel):
            CostModel.parse(costs)


################################################################################
# plain distances


def test_identical_trees():
    assert ted(DIVIDE, DIVIDE.copy()) == 0


def test_structural_ted_ignores_labels():
    assert structural_ted(from_bracket("{a{b}}"), from_bracket("{x{y}}")) == 0
    assert structural_ted(from_bracket("{a}"), from_bracket("{a{b}}")) == 1


def test_divide_against_inverse():
    cm = CostModel.with_shortcuts()

    assert ted(DIVIDE, INVERSE, cm) == pytest.approx(3.75)
    assert ted(DIVIDE, INVERSE, CostModel()) == pytest.approx(4)


def test_matches_reference():
    rng = random.Random(2022)

    for cm in (CostModel(), CostModel(1, 1, 0), CostModel(2, 1, 0.5)):
        for _ in range(400):
            a = random_tree(rng, rng.randint(1, 6))
            b = random_tree(rng, rng.randint(1, 6))

            assert ted(a, b, cm) == pytest.approx(reference_ted(a, b, cm))


def test_metric_properties():
    rng = random.Random(7)
    cm = CostModel()

    for _ in range(200):
        a, b, c = (random_tree(rng, rng.randint(1, 7)) for _ in range(3))

        assert ted(a, b, cm) == pytest.approx(ted(b, a, cm))
        assert ted(a, c, cm) <= ted(a, b, cm) + ted(b, c, cm) + 1e-9
        assert abs(a.size() - b.size()) <= ted(a, b, cm) <= a.size() + b.size()


def test_mapping_covers_both_trees():
    mapping = ted_mapping(DIVIDE, INVERSE)

    assert sum(1 for x, _ in mapping if x is not None) == DIVIDE.size()
    assert sum(1 for _, y in mapping if y is not None) == INVERSE.size()


################################################################################
# shortcuts


def test_shortcut_shortens_distance():
    cm = CostModel.with_shortcuts()

    assert ted(DIVIDE, INVERSE, cm, default_shortcuts()) == pytest.approx(0.5)
    assert ted(INVERSE, DIVIDE, cm, default_shortcuts()) == pytest.approx(0.5)


def test_shortcut_inside_tree():
    cm = CostModel.with_shortcuts()
    a = from_bracket("{eq{x}{divide{a}{b}}}")
    b = from_bracket("{eq{x}{times{a}{power{b}{minus{1}}}}}")

    assert ted(a, b, cm, default_shortcuts()) == pytest.approx(0.5)


def test_rules_need_enabled_shortcuts():
    with pytest.raises(InvalidCostModel):
        ted(DIVIDE, INVERSE, CostModel(), default_shortcuts())


def test_rule_price_overrides_cost_model():
    rule = ShortcutRule.from_text("{divide{?x}{?y}}", "{over{?x}{?y}}", 0.1)
    cm = CostModel.with_shortcuts()

    over = from_bracket("{over{a}{b}}")

    assert ted(DIVIDE, over, cm, [rule]) == pytest.approx(0.1)


def test_equivalence_zero_check():
    a = from_bracket("{times{a}{plus{divide{b}{c}}{divide{d}{c}}}}")
    b = from_bracket("{divide{times{a}{plus{b}{d}}}{c}}")

    assert equivalence_zero_check(a, b)
    assert not equivalence_zero_check(from_bracket("{x}"), from_bracket("{y}"))


def test_commutativity_is_free():
    cm = CostModel.with_shortcuts()
    a = from_bracket("{plus{x}{y}}")
    b = from_bracket("{plus{y}{x}}")

    assert ted(a, b, cm, default_equivalences()) == 0


################################################################################
# rule files


def test_parse_rules():
    rules = parse_rules(
        "# comment\n"
        "\n"
        "{minus{?x}} = {times{-1}{?x}} ; 0.25\n"
        "{root{?x}} = {power{?x}{0.5}}  # trailing comment\n"
    )

    assert len(rules) == 2
    assert rules[0].cost == 0.25
    assert rules[1].cost is None


@pytest.mark.parametrize(
    "line",
    [
        "{a{?x}}",
        "{a{?x}} = {b{?y}}",
        "{a{?x}} = {b{?x}} ; -1",
        "{a{?x}} = {b{?x}} ; cheap",
        "{a{?x} = {b{?x}}",
    ],
)
def test_malformed_rule(line):
    with pytest.raises(RuleFormatError) as info:
        parse_rules("# header\n" + line)

    assert info.value.line == 2

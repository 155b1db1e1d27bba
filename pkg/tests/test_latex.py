################################################################################
#
# Tests of tokenizing, parsing, printing and cleaning TeX.
#
# Author(s): Anonymous
################################################################################

import pytest

from src.latex import (
    ArityError,
    IllegalCharacter,
    LatexSyntaxError,
    TokenKind,
    UnbalancedGroup,
    UnknownMacro,
    parse_tex,
    strip_formatting,
    to_tex,
    tokenize,
)
from src.latex.parser import macro_bindings

################################################################################
# tokenizer


def _kinds_and_lexemes(src):
    return [(t.kind, t.lexeme) for t in tokenize(src)]


def test_digits_are_single_tokens():
    assert _kinds_and_lexemes(r"\frac12") == [
        (TokenKind.Command, r"\frac"),
        (TokenKind.Number, "1"),
        (TokenKind.Number, "2"),
    ]


def test_function_call_tokens():
    assert _kinds_and_lexemes(r"\zeta(s)") == [
        (TokenKind.Command, r"\zeta"),
        (TokenKind.OpenFence, "("),
        (TokenKind.Identifier, "s"),
        (TokenKind.CloseFence, ")"),
    ]


def test_lexemes_reconstruct_source(riemann_tex):
    tokens = tokenize(riemann_tex)

    assert "".join(t.lexeme for t in tokens) == riemann_tex

    positions = [t.position for t in tokens]
    assert positions == sorted(set(positions))


def test_positions_count_bytes():
    tokens = tokenize("ζ+x")

    assert [t.position for t in tokens] == [0, 2, 3]


def test_escaped_braces_are_fences():
    kinds = [t.kind for t in tokenize(r"\{a\}")]

    assert kinds == [TokenKind.OpenFence, TokenKind.Identifier, TokenKind.CloseFence]


def test_spacing_commands_are_whitespace():
    kinds = [t.kind for t in tokenize(r"a\,b")]

    assert kinds == [TokenKind.Identifier, TokenKind.Whitespace, TokenKind.Identifier]


@pytest.mark.parametrize("src", ["{a", "a}", "{{a}"])
def test_unbalanced_group(src):
    with pytest.raises(UnbalancedGroup):
        tokenize(src)


@pytest.mark.parametrize("src", ["$x$", "a#b", "x\\"])
def test_illegal_character(src):
    with pytest.raises(IllegalCharacter):
        tokenize(src)


################################################################################
# parser


def test_riemann_token_accounting(riemann_tex):
    tree = parse_tex(riemann_tex)

    assert tree.token_count() == 18
    assert tree.depth() == 2


def test_single_identifier():
    tree = parse_tex("x")

    assert tree.label == "x"
    assert tree.attrs["element"] == "mi"
    assert tree.token_count() == 1
    assert tree.depth() == 1


def test_subscript():
    tree = parse_tex("p_i")

    assert tree.label == "Script"
    assert tree.attrs["element"] == "msub"
    assert [c.label for c in tree.children] == ["p", "i"]


def test_subsup_orders_children():
    tree = parse_tex("x^2_i")

    assert tree.attrs["element"] == "msubsup"
    assert [c.label for c in tree.children] == ["x", "i", "2"]


def test_multi_digit_numbers():
    tree = parse_tex("12.5+x")

    assert [c.label for c in tree.children] == ["12.5", "+", "x"]
    assert tree.children[0].attrs["element"] == "mn"


def test_fraction_takes_single_digits():
    tree = parse_tex(r"\frac12")

    assert tree.label == "Fraction"
    assert [c.label for c in tree.children] == ["1", "2"]


def test_symbols_render_to_glyphs():
    tree = parse_tex(r"\alpha\leq\beta")

    assert [c.label for c in tree.children] == ["α", "≤", "β"]
    assert [c.attrs["element"] for c in tree.children] == ["mi", "mo", "mi"]


def test_cases_environment():
    tree = parse_tex(r"\begin{cases} 1 & x>0 \\ 0 & \text{otherwise} \end{cases}")

    assert tree.label == "Table"
    assert tree.attrs["env"] == "cases"
    assert len(tree.children) == 2
    assert all(len(row.children) == 2 for row in tree.children)


def test_unknown_macro():
    with pytest.raises(UnknownMacro):
        parse_tex(r"\foo x")


def test_missing_argument():
    with pytest.raises(ArityError):
        parse_tex(r"\frac{a}")


def test_double_subscript():
    with pytest.raises(LatexSyntaxError):
        parse_tex("x_1_2")


def test_macro_expansion_is_tagged(registry):
    tree = parse_tex(r"\commutator{a}{b}", registry)

    assert tree.attrs["macro"] == "commutator"
    assert [leaf.label for leaf in tree.leaves()] == ["[", "a", ",", "b", "]"]


def _scripts(tree):
    return [n for n in tree.preorder() if n.label == "Script"]


def test_omitted_optional_argument_leaves_no_slot(registry):
    tree = parse_tex(r"\LegendreQ{n}@{x}", registry)
    (script,) = _scripts(tree)

    assert script.attrs["element"] == "msub"
    assert [c.label for c in script.children] == ["Q", "n"]
    assert not any(n.label == "Row" and n.is_leaf for n in tree.preorder())
    assert sorted(macro_bindings(tree, registry)) == [2, 3]


def test_given_optional_argument_is_a_superscript(registry):
    tree = parse_tex(r"\LegendreQ[m]{n}@{x}", registry)
    (script,) = _scripts(tree)

    assert script.attrs["element"] == "msubsup"
    assert [c.label for c in script.children] == ["Q", "n", "m"]
    assert macro_bindings(tree, registry)[1].label == "m"


################################################################################
# printer


@pytest.mark.parametrize(
    "src",
    [
        r"\zeta(s) = 0 \Rightarrow \Re s = \frac12 \lor \Im s=0",
        r"x^2_i + \sqrt[3]{y}",
        r"\commutator{a}{b}",
        r"\BesselJ{\nu}@{z}",
        r"\LegendreQ{n}@{x}",
        r"\mathbf{v} \cdot \mathbf{w}",
    ],
)
def test_print_then_parse_is_identity(src, registry):
    tree = parse_tex(src, registry)

    assert parse_tex(to_tex(tree, registry), registry).same_shape(tree)


def test_print_then_parse_gold(gold, registry):
    for entry in gold:
        for src in (entry.corrected_tex, entry.semantic_tex):
            tree = parse_tex(src, registry)
            printed = to_tex(tree, registry)

            assert parse_tex(printed, registry).same_shape(tree), (entry.id, printed)


################################################################################
# cleanup


@pytest.mark.parametrize(
    "src, expected",
    [
        (r"a\,b", "ab"),
        (r"x \! y", "x y"),
        ("E=mc^2", "E=mc^2"),
        (r"\left( x \right)", "( x )"),
        (r"\bigl[ a \bigr]", "[ a ]"),
    ],
)
def test_strip_formatting(src, expected):
    assert strip_formatting(src) == expected

################################################################################
#
# Tests of macro definitions and the macro registry.
#
# Author(s): Anonymous
################################################################################

import pytest

from src.latex import (
    DuplicateMacro,
    MacroDef,
    MacroRegistry,
    register_macro_file,
    register_physics_macros,
)
from src.latex.parser import parse_tex

################################################################################
# definitions


def test_template_slots_are_checked():
    with pytest.raises(ValueError):
        MacroDef(r"\bad", arity=1, template="#1 + #2")


def test_exactly_one_kind():
    with pytest.raises(ValueError):
        MacroDef(r"\bad", symbol="x", template="x")

    with pytest.raises(ValueError):
        MacroDef(r"\bad")


def test_name_needs_backslash():
    with pytest.raises(ValueError):
        MacroDef("bad", symbol="x")


################################################################################
# the registry


def test_special_macros_register_once():
    registry = register_physics_macros(MacroRegistry.empty())

    assert len(registry) == 6
    assert registry.get(r"\commutator").semantics.symbol_id == "Q2989763"
    assert registry.annotations()["degree"].symbol_id == "Q28390"

    with pytest.raises(DuplicateMacro):
        register_physics_macros(registry)


def test_default_registry_contents(registry):
    assert r"\frac" in registry
    assert r"\anticommutator" in registry
    assert registry.by_bare_name("BesselJ").at_split == 1
    assert registry.reverse_symbols()["ζ"] == r"\zeta"
    assert registry.reverse_symbols()["⇒"] == r"\Rightarrow"


def test_macro_file(tmp_path):
    path = tmp_path / "macros.yaml"
    path.write_text(
        "macros:\n"
        "  - name: \\inner\n"
        "    arity: 2\n"
        "    template: '\\langle #1,#2 \\rangle'\n"
        "    annotation: {cd: linalg1, symbol_id: scalarproduct, label: inner}\n",
        encoding="utf-8",
    )

    registry = register_macro_file(MacroRegistry.builtin(), path)
    tree = parse_tex(r"\inner{u}{v}", registry)

    assert registry.get(r"\inner").semantics.label == "inner"
    assert tree.attrs["macro"] == "inner"
    assert [leaf.label for leaf in tree.leaves()] == ["⟨", "u", ",", "v", "⟩"]

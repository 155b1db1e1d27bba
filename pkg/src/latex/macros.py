################################################################################
#
# Macro definitions and the registry the parser resolves commands against.
#
# Three kinds of macros exist:
#   * symbols, which render to a single token (\alpha, \leq, \sin)
#   * structural built-ins with a dedicated parse handler (\frac, \sqrt, ...)
#   * template macros, which expand a TeX template with argument slots
#     #1..#n; optional arguments take the first slot numbers.
#
# Template macros may carry a semantic annotation. The contentizer turns the
# expansion into an application of the annotated symbol to the arguments.
#
# Author(s): Anonymous
################################################################################

import functools
import pathlib
import re

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional

from omegaconf import OmegaConf

from src.latex.errors import DuplicateMacro
from src.latex.symbols import VARIANTS, symbol_table
from src.resources import MACRO_FILE, resource_path
from src.semantics.annotation import SemanticAnnotation

################################################################################
# definition of a single macro

_SLOT_PATTERN = re.compile(r"#(\d+)")

HANDLERS = frozenset(
    {
        "frac",
        "sqrt",
        "operatorname",
        "text",
        "variant",
        "delimiter",
        "scale",
        "begin",
        "end",
        "tag",
        "rowsep",
    }
)

# how the contentizer reads the expansion of a template macro
MACRO_ROLES = frozenset({"head", "apply", "constraint"})


@dataclass(frozen=True)
class MacroDef:
    # command name including the backslash
    name: str

    # number of mandatory arguments
    arity: int = 0

    # number of optional [...] arguments, which precede the mandatory ones
    optional_args: int = 0

    # content symbol the expansion stands for
    semantics: Optional[SemanticAnnotation] = None

    # TeX template with argument slots
    template: Optional[str] = None

    # rendered text of a symbol macro
    symbol: Optional[str] = None

    # MathML token element of a symbol macro
    element: str = "mi"

    # structural built-in handled directly by the parser
    handler: Optional[str] = None

    # number of mandatory arguments before the '@' separator, None if no '@'
    at_split: Optional[int] = None

    role: str = "head"

    def __post_init__(self):
        if not self.name.startswith("\\") or len(self.name) < 2:
            raise ValueError(f"macro names start with a backslash, got {self.name=}")
        if self.arity < 0 or self.optional_args < 0:
            raise ValueError(f"negative argument count for {self.name}")

        kinds = [k for k in (self.template, self.symbol, self.handler) if k is not None]
        if len(kinds) != 1:
            raise ValueError(
                f"{self.name} needs exactly one of template, symbol or handler"
            )

        if self.handler is not None and self.handler not in HANDLERS:
            raise ValueError(f"unknown handler {self.handler=} for {self.name}")
        if self.role not in MACRO_ROLES:
            raise ValueError(f"unknown macro {self.role=} for {self.name}")

        if self.template is not None:
            total = self.arity + self.optional_args

            for slot in _SLOT_PATTERN.findall(self.template):
                if not 1 <= int(slot) <= total:
                    raise ValueError(
                        f"template of {self.name} references slot #{slot}, "
                        f"but only 1..{total} exist"
                    )

        if self.at_split is not None and not 0 <= self.at_split <= self.arity:
            raise ValueError(f"{self.at_split=} out of range for {self.name}")

    @property
    def total_args(self) -> int:
        return self.arity + self.optional_args

    @property
    def bare_name(self) -> str:
        return self.name[1:]


################################################################################
# the registry


class MacroRegistry:
    def __init__(self, macros: Iterable[MacroDef] = ()):
        table: Dict[str, MacroDef] = {}

        for macro in macros:
            if macro.name in table:
                raise DuplicateMacro(f"macro {macro.name} defined twice")
            table[macro.name] = macro

        self._macros = MappingProxyType(table)

    @property
    def macros(self) -> Mapping[str, MacroDef]:
        return self._macros

    def get(self, name: str) -> Optional[MacroDef]:
        return self._macros.get(name)

    def by_bare_name(self, bare_name: str) -> Optional[MacroDef]:
        return self._macros.get("\\" + bare_name)

    def with_macros(self, macros: Iterable[MacroDef]) -> "MacroRegistry":
        return MacroRegistry([*self._macros.values(), *macros])

    def annotations(self) -> Dict[str, SemanticAnnotation]:
        return {
            m.bare_name: m.semantics
            for m in self._macros.values()
            if m.semantics is not None
        }

    def __contains__(self, name: str) -> bool:
        return name in self._macros

    def __len__(self) -> int:
        return len(self._macros)

    def __iter__(self):
        return iter(self._macros.values())

    def __repr__(self) -> str:
        return f"MacroRegistry({len(self)} macros)"

    @functools.lru_cache(maxsize=None)
    def reverse_symbols(self) -> Dict[str, str]:
        """
        Map rendered symbol text back to its canonical command.
        """
        reverse: Dict[str, str] = {}

        for macro in self._macros.values():
            if macro.symbol is not None and macro.symbol not in reverse:
                reverse[macro.symbol] = macro.name

        return reverse

    @classmethod
    def empty(cls) -> "MacroRegistry":
        return cls()

    @classmethod
    def builtin(cls) -> "MacroRegistry":
        return cls(builtin_macros())


def builtin_macros():
    macros = [
        MacroDef(name, symbol=text, element=element)
        for name, (text, element) in symbol_table().items()
    ]

    structural = [
        ("\\frac", 2, 0, "frac"),
        ("\\dfrac", 2, 0, "frac"),
        ("\\tfrac", 2, 0, "frac"),
        ("\\sqrt", 1, 1, "sqrt"),
        ("\\operatorname", 1, 0, "operatorname"),
        ("\\text", 1, 0, "text"),
        ("\\textrm", 1, 0, "text"),
        ("\\mbox", 1, 0, "text"),
        ("\\left", 0, 0, "delimiter"),
        ("\\right", 0, 0, "delimiter"),
        ("\\middle", 0, 0, "delimiter"),
        ("\\begin", 0, 0, "begin"),
        ("\\end", 0, 0, "end"),
        ("\\tag", 1, 0, "tag"),
        ("\\\\", 0, 0, "rowsep"),
    ]
    macros += [
        MacroDef(name, arity=arity, optional_args=optional, handler=handler)
        for name, arity, optional, handler in structural
    ]

    macros += [MacroDef(name, arity=1, handler="variant") for name in VARIANTS]

    for size in ("big", "Big", "bigg", "Bigg"):
        for suffix in ("", "l", "r", "m"):
            macros.append(MacroDef(f"\\{size}{suffix}", handler="scale"))

    macros += [
        MacroDef("\\limits", handler="scale"),
        MacroDef("\\nolimits", handler="scale"),
    ]

    return macros


################################################################################
# the special content symbols for commutators, tensors and friends


def physics_macros():
    def wikidata(qid: str, label: str) -> SemanticAnnotation:
        return SemanticAnnotation("wikidata", qid, label)

    return [
        MacroDef(
            "\\commutator",
            arity=2,
            template="[#1,#2]",
            semantics=wikidata("Q2989763", "commutator"),
        ),
        MacroDef(
            "\\tensor",
            arity=3,
            template="{#1}^{#2}_{#3}",
            semantics=wikidata("Q188524", "tensor"),
        ),
        MacroDef(
            "\\adjoint",
            arity=1,
            template="{#1}^{\\dagger}",
            semantics=wikidata("Q2051983", "adjoint"),
        ),
        MacroDef(
            "\\transformation",
            arity=1,
            template="{#1}^{\\prime}",
            semantics=wikidata("Q12202238", "transformation"),
        ),
        MacroDef(
            "\\degree",
            arity=1,
            template="{#1}^{\\circ}",
            semantics=wikidata("Q28390", "degree"),
        ),
        MacroDef(
            "\\contraction",
            arity=2,
            template="{#1}^{(#2)}",
            semantics=wikidata("Q5165685", "contraction"),
        ),
    ]


def register_physics_macros(registry: MacroRegistry) -> MacroRegistry:
    return registry.with_macros(physics_macros())


################################################################################
# declarative macro files


def load_macro_file(path: pathlib.Path):
    """
    Read macro definitions from a yaml file with a top-level `macros` list.
    Every record has a name, an arity, optionally `optional_args`, `at_split`,
    `role`, a `template` and an `annotation` (cd, symbol_id, label).
    """
    cfg = OmegaConf.to_container(OmegaConf.load(str(path)), resolve=True)
    records = cfg.get("macros", None) or []

    macros = []

    for record in records:
        record = dict(record)
        annotation = record.pop("annotation", None)

        if annotation is not None:
            annotation = SemanticAnnotation(**annotation)

        macros.append(MacroDef(semantics=annotation, **record))

    return macros


def register_macro_file(registry: MacroRegistry, path: pathlib.Path) -> MacroRegistry:
    return registry.with_macros(load_macro_file(path))


@functools.lru_cache(maxsize=None)
def default_registry() -> MacroRegistry:
    registry = register_physics_macros(MacroRegistry.builtin())
    return register_macro_file(registry, resource_path(MACRO_FILE))

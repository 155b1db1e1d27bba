from .errors import (
    LatexError,
    UnbalancedGroup,
    IllegalCharacter,
    UnknownMacro,
    ArityError,
    LatexSyntaxError,
    DuplicateMacro,
)
from .tokenizer import Token, TokenKind, tokenize
from .macros import (
    MacroDef,
    MacroRegistry,
    builtin_macros,
    physics_macros,
    register_physics_macros,
    load_macro_file,
    register_macro_file,
    default_registry,
)
from .parser import parse, parse_tex
from .printer import to_tex
from .cleanup import strip_formatting

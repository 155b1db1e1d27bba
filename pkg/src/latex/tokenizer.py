################################################################################
#
# Split a TeX math-mode string into tokens. Every character of the input ends
# up in exactly one token, so concatenating the lexemes reconstructs the
# source. Digits become one Number token each, as in TeX; the parser merges
# runs of digits where no macro consumes them as single arguments.
#
# Author(s): Anonymous
################################################################################

import unicodedata

from dataclasses import dataclass
from enum import Enum
from typing import List

from src.latex.errors import IllegalCharacter, UnbalancedGroup

################################################################################
# token structure


class TokenKind(str, Enum):
    Identifier = "Identifier"
    Number = "Number"
    Operator = "Operator"
    Relation = "Relation"
    OpenFence = "OpenFence"
    CloseFence = "CloseFence"
    Command = "Command"
    Text = "Text"
    SubscriptMarker = "SubscriptMarker"
    SuperscriptMarker = "SuperscriptMarker"
    GroupOpen = "GroupOpen"
    GroupClose = "GroupClose"
    Whitespace = "Whitespace"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str

    # byte offset into the UTF-8 encoded source
    position: int

    def __str__(self):
        return f"{self.kind.value} {self.lexeme!r}"


################################################################################
# character classes

# spacing macros, which only influence rendering
WHITESPACE_COMMANDS = frozenset(
    {
        "\\,",
        "\\;",
        "\\:",
        "\\!",
        "\\>",
        "\\ ",
        "\\quad",
        "\\qquad",
        "\\displaystyle",
        "\\textstyle",
        "\\scriptstyle",
    }
)

# commands whose single argument is raw text rather than math
TEXT_COMMANDS = frozenset({"\\text", "\\textrm", "\\mbox", "\\operatorname"})

_ASCII_RELATIONS = frozenset("=<>")
_ASCII_OPERATORS = frozenset("+-*/,;:!'|@&.?")
_UNICODE_RELATIONS = frozenset("≤≥≠≈≡∼≃≅∝→←↦⇒⇐⇔∈∉⊂⊃⊆⊇")


def _char_kind(char: str) -> TokenKind:
    if char.isalpha():
        return TokenKind.Identifier
    if char in _UNICODE_RELATIONS:
        return TokenKind.Relation

    return TokenKind.Operator


################################################################################
# the tokenizer


def tokenize(src: str, allow_slots: bool = False) -> List[Token]:
    """
    Tokenize TeX math. With `allow_slots`, macro template placeholders such as
    `#1` are accepted and returned as Command tokens.
    """
    return _Tokenizer(src, allow_slots).run()


class _Tokenizer:
    def __init__(self, src: str, allow_slots: bool):
        self.src = src
        self.allow_slots = allow_slots
        self.pos = 0
        self.byte_pos = 0
        self.tokens: List[Token] = []
        self.open_groups: List[int] = []

    def emit(self, kind: TokenKind, lexeme: str):
        self.tokens.append(Token(kind, lexeme, self.byte_pos))
        self.pos += len(lexeme)
        self.byte_pos += len(lexeme.encode("utf-8"))

    def run(self) -> List[Token]:
        src = self.src

        while self.pos < len(src):
            char = src[self.pos]

            if char in " \t\n\r~":
                end = self.pos
                while end < len(src) and src[end] in " \t\n\r~":
                    end += 1
                self.emit(TokenKind.Whitespace, src[self.pos : end])

            elif char == "%":
                end = src.find("\n", self.pos)
                end = len(src) if end == -1 else end + 1
                self.emit(TokenKind.Whitespace, src[self.pos : end])

            elif char == "\\":
                self.command()

            elif char == "{":
                self.open_groups.append(self.byte_pos)
                self.emit(TokenKind.GroupOpen, char)

            elif char == "}":
                if not self.open_groups:
                    raise UnbalancedGroup("unmatched '}'", self.byte_pos)
                self.open_groups.pop()
                self.emit(TokenKind.GroupClose, char)

            elif char == "^":
                self.emit(TokenKind.SuperscriptMarker, char)
            elif char == "_":
                self.emit(TokenKind.SubscriptMarker, char)
            elif char in "([":
                self.emit(TokenKind.OpenFence, char)
            elif char in ")]":
                self.emit(TokenKind.CloseFence, char)
            elif "0" <= char <= "9":
                self.emit(TokenKind.Number, char)
            elif char.isascii() and char.isalpha():
                self.emit(TokenKind.Identifier, char)
            elif char in _ASCII_RELATIONS:
                self.emit(TokenKind.Relation, char)
            elif char in _ASCII_OPERATORS:
                self.emit(TokenKind.Operator, char)

            elif char == "#" and self.allow_slots:
                end = self.pos + 1
                while end < len(src) and src[end].isdigit():
                    end += 1
                if end == self.pos + 1:
                    raise IllegalCharacter("'#' without slot number", self.byte_pos)
                self.emit(TokenKind.Command, src[self.pos : end])

            elif self.is_illegal(char):
                raise IllegalCharacter(f"unsupported character {char!r}", self.byte_pos)

            else:
                self.emit(_char_kind(char), char)

        if self.open_groups:
            raise UnbalancedGroup("unmatched '{'", self.open_groups[-1])

        return self.tokens

    @staticmethod
    def is_illegal(char: str) -> bool:
        if char in "$#\\":
            return True

        category = unicodedata.category(char)
        return category.startswith("C") or category in ("Zl", "Zp")

    def command(self):
        src = self.src
        end = self.pos + 1

        if end >= len(src):
            raise IllegalCharacter("trailing backslash", self.byte_pos)

        if src[end].isascii() and src[end].isalpha():
            while end < len(src) and src[end].isascii() and src[end].isalpha():
                end += 1
        else:
            end += 1

        lexeme = src[self.pos : end]

        if lexeme in WHITESPACE_COMMANDS:
            self.emit(TokenKind.Whitespace, lexeme)
        elif lexeme == "\\{":
            self.emit(TokenKind.OpenFence, lexeme)
        elif lexeme == "\\}":
            self.emit(TokenKind.CloseFence, lexeme)
        else:
            self.emit(TokenKind.Command, lexeme)

            if lexeme in TEXT_COMMANDS:
                self.text_argument()

    def text_argument(self):
        src = self.src
        start = self.pos

        while start < len(src) and src[start] in " \t\n\r":
            start += 1

        if start >= len(src) or src[start] != "{":
            # no braced argument, the parser reports the missing argument
            return

        if start > self.pos:
            self.emit(TokenKind.Whitespace, src[self.pos : start])

        depth = 0
        end = start

        while end < len(src):
            if src[end] == "\\" and end + 1 < len(src):
                end += 2
                continue
            if src[end] == "{":
                depth += 1
            elif src[end] == "}":
                depth -= 1
                if depth == 0:
                    break
            end += 1

        if depth != 0:
            raise UnbalancedGroup("unterminated text argument", self.byte_pos)

        self.emit(TokenKind.GroupOpen, "{")

        if end > self.pos:
            self.emit(TokenKind.Text, src[self.pos : end])

        self.emit(TokenKind.GroupClose, "}")

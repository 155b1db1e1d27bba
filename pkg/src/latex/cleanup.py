################################################################################
#
# Remove formatting from TeX which does not carry meaning: spacing macros,
# comments, ties and display-only delimiter scaling.
#
# Author(s): Anonymous
################################################################################

from typing import List

from src.latex.tokenizer import WHITESPACE_COMMANDS, Token, TokenKind, tokenize

################################################################################
# tokens dropped from the output

_SCALING_COMMANDS = frozenset(
    f"\\{size}{suffix}"
    for size in ("big", "Big", "bigg", "Bigg")
    for suffix in ("", "l", "r", "m")
)

_DELIMITER_COMMANDS = frozenset({"\\left", "\\right", "\\middle"})


def _is_letter(char: str) -> bool:
    return char.isascii() and char.isalpha()


def strip_formatting(src: str) -> str:
    """
    Return `src` without its purely visual markup. Plain whitespace is
    collapsed to single spaces and kept wherever dropping a token would glue a
    command name to a following letter.
    """
    kept: List[Token] = []
    drop_null_delimiter = False

    for tok in tokenize(src):
        if tok.kind == TokenKind.Whitespace:
            if tok.lexeme in WHITESPACE_COMMANDS or tok.lexeme.startswith("%"):
                continue
            if not tok.lexeme.replace("~", ""):
                continue
            if kept and kept[-1].kind == TokenKind.Whitespace:
                continue

            kept.append(Token(TokenKind.Whitespace, " ", tok.position))
            continue

        if tok.kind == TokenKind.Command and tok.lexeme in _SCALING_COMMANDS:
            continue

        if tok.kind == TokenKind.Command and tok.lexeme in _DELIMITER_COMMANDS:
            drop_null_delimiter = True
            continue

        if drop_null_delimiter:
            drop_null_delimiter = False
            if tok.kind == TokenKind.Operator and tok.lexeme == ".":
                continue

        kept.append(tok)

    parts = []
    previous = None

    for tok in kept:
        if (
            previous is not None
            and previous.kind == TokenKind.Command
            and _is_letter(previous.lexeme[-1])
            and _is_letter(tok.lexeme[0])
        ):
            parts.append(" ")

        parts.append(tok.lexeme)
        previous = tok

    return "".join(parts)

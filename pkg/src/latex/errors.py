################################################################################
#
# Exceptions raised while tokenizing and parsing TeX.
#
# Author(s): Anonymous
################################################################################

from typing import Optional

################################################################################
# base class


class LatexError(ValueError):
    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at byte {position})"

        super().__init__(message)
        self.position = position


################################################################################
# tokenizer errors


class UnbalancedGroup(LatexError):
    pass


class IllegalCharacter(LatexError):
    pass


################################################################################
# parser errors


class UnknownMacro(LatexError):
    pass


class ArityError(LatexError):
    pass


class LatexSyntaxError(LatexError):
    pass


################################################################################
# registry errors


class DuplicateMacro(LatexError):
    pass

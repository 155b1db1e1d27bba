################################################################################
#
# Exceptions raised while reading the textual context of a formula.
#
# Author(s): Anonymous
################################################################################


class ContextError(ValueError):
    pass


class NoContext(ContextError):
    def __init__(self):
        super().__init__("document has no text surrounding its formulae")

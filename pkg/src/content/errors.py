################################################################################
#
# Exceptions raised while deriving content trees.
#
# Author(s): Anonymous
################################################################################


class ContentError(ValueError):
    pass


class AmbiguityUnresolved(ContentError):
    def __init__(self, lexeme: str, roles):
        roles = sorted(r.value for r in roles)
        super().__init__(
            f"{lexeme=} has conflicting roles {roles} and every refinement is disabled"
        )
        self.lexeme = lexeme

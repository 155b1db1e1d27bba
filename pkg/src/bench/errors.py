################################################################################
#
# Exceptions raised while loading benchmark data and reporting results.
#
# Author(s): Anonymous
################################################################################

from typing import Optional


class BenchError(ValueError):
    pass


class SchemaError(BenchError):
    def __init__(self, entry_id: Optional[int], message: str):
        super().__init__(f"gold entry {entry_id}: {message}")
        self.entry_id = entry_id


class ParseError(BenchError):
    def __init__(self, entry_id: Optional[int], message: str):
        super().__init__(f"gold entry {entry_id}: {message}")
        self.entry_id = entry_id


class EmptyResults(BenchError):
    pass

################################################################################
#
# A context-free dictionary from TeX lexemes to their possible readings.
#
# The file format is UTF-8 with one record per line and six tab-separated
# columns: lexeme, role, cd, symbol_id, label, description. Empty lines and
# lines starting with '#' are ignored.
#
# Author(s): Anonymous
################################################################################

import functools
import logging
import pathlib

from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from src.resources import LEXICON_FILE, resource_path
from src.semantics.annotation import Reading, Role, SemanticAnnotation

log = logging.getLogger(__name__)

################################################################################
# errors


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


################################################################################
# the lexicon


class Lexicon:
    def __init__(self, entries: Optional[Mapping[str, Iterable[Reading]]] = None):
        table: Dict[str, Tuple[Reading, ...]] = {}

        for lexeme, readings in (entries or {}).items():
            readings = tuple(readings)

            if len(set(readings)) != len(readings):
                raise ValueError(f"duplicate reading for {lexeme=}")

            table[lexeme] = readings

        self._entries = MappingProxyType(table)

    @property
    def entries(self) -> Mapping[str, Tuple[Reading, ...]]:
        return self._entries

    def lookup(self, lexeme: str) -> Tuple[Reading, ...]:
        return self._entries.get(lexeme, ())

    def labels(self) -> List[Tuple[str, str, Reading]]:
        """
        All (lowercased label, lexeme, reading) triples carrying an annotation.
        """
        return [
            (r.annotation.label.lower(), lexeme, r)
            for lexeme, readings in self._entries.items()
            for r in readings
            if r.annotation is not None
        ]

    def __contains__(self, lexeme: str) -> bool:
        return lexeme in self._entries

    def __len__(self) -> int:
        return sum(len(r) for r in self._entries.values())

    def __repr__(self) -> str:
        return f"Lexicon(lexemes={len(self._entries)}, readings={len(self)})"


def lookup(lexeme: str, lexicon: Lexicon) -> Tuple[Reading, ...]:
    return lexicon.lookup(lexeme)


################################################################################
# reading from disk


def load_lexicon(path: pathlib.Path) -> Lexicon:
    path = pathlib.Path(path)
    entries: Dict[str, List[Reading]] = {}

    with path.open("r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.rstrip("\n").rstrip("\r")

            if not line.strip() or line.startswith("#"):
                continue

            lexeme, reading = _parse_record(line, line_number)

            if reading in entries.get(lexeme, []):
                raise FormatError(line_number, f"duplicate entry for {lexeme=}")

            entries.setdefault(lexeme, []).append(reading)

    lexicon = Lexicon(entries)
    log.debug(f"loaded {lexicon} from {path}")

    return lexicon


def _parse_record(line: str, line_number: int) -> Tuple[str, Reading]:
    fields = line.split("\t")

    if len(fields) not in (5, 6):
        raise FormatError(
            line_number, f"expected 5 or 6 tab-separated fields, got {len(fields)}"
        )

    lexeme, role, cd, symbol_id, label = [f.strip() for f in fields[:5]]
    description = fields[5].strip() if len(fields) == 6 and fields[5].strip() else None

    if not lexeme:
        raise FormatError(line_number, "empty lexeme")

    try:
        role = Role(role)
    except ValueError:
        raise FormatError(line_number, f"unknown {role=}")

    try:
        annotation = SemanticAnnotation(cd, symbol_id, label, description)
    except ValueError as e:
        raise FormatError(line_number, str(e))

    return lexeme, Reading(role, annotation)


@functools.lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    return load_lexicon(resource_path(LEXICON_FILE))

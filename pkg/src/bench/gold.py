################################################################################
#
# The gold standard: manually curated formulae with their corrected TeX, their
# semantic TeX and verified parallel MathML. The file holds one JSON object
# per line.
#
# Author(s): Anonymous
################################################################################

import functools
import json
import logging
import pathlib

from dataclasses import dataclass
from typing import List, Optional

from src.bench.errors import ParseError, SchemaError
from src.context.document import ContextDocument
from src.latex.errors import LatexError
from src.latex.macros import MacroRegistry, default_registry
from src.latex.parser import parse_tex
from src.mathml.errors import MathMLError
from src.mathml.markup import ParallelMarkup
from src.mathml.reader import parse_mathml
from src.resources import FUNCTION_GOLD_FILE, GOLD_FILE, resource_path

log = logging.getLogger(__name__)

FORMULA_TYPES = ("definition", "equation", "relation", "general")

REQUIRED_FIELDS = (
    "id",
    "formula_type",
    "original_tex",
    "corrected_tex",
    "semantic_tex",
    "gold_mathml",
)

OPTIONAL_FIELDS = ("name", "context", "hyperlink")

################################################################################
# a single entry


@dataclass(frozen=True)
class GoldEntry:
    id: int
    formula_type: str
    original_tex: str
    corrected_tex: str
    semantic_tex: str
    gold_mathml: str
    name: Optional[str] = None

    # running text around the formula, inline formulae written as `$tex$`
    context: Optional[str] = None

    hyperlink: Optional[str] = None

    def __post_init__(self):
        if self.formula_type not in FORMULA_TYPES:
            raise SchemaError(
                self.id, f"{self.formula_type=} is not one of {FORMULA_TYPES}"
            )

    @functools.cached_property
    def markup(self) -> ParallelMarkup:
        return parse_mathml(self.gold_mathml)

    @property
    def context_document(self) -> Optional[ContextDocument]:
        if self.context is None:
            return None

        return ContextDocument.from_text(self.context, target=self.corrected_tex)

    def to_record(self) -> dict:
        record = {f: getattr(self, f) for f in REQUIRED_FIELDS}
        record.update(
            {f: getattr(self, f) for f in OPTIONAL_FIELDS if getattr(self, f)}
        )

        return record


################################################################################
# loading


def _entry(record: dict, line_number: int) -> GoldEntry:
    if not isinstance(record, dict):
        raise SchemaError(None, f"line {line_number} is not a JSON object")

    entry_id = record.get("id")

    missing = [f for f in REQUIRED_FIELDS if f not in record]
    if missing:
        raise SchemaError(entry_id, f"missing fields {missing}")

    unknown = set(record) - set(REQUIRED_FIELDS) - set(OPTIONAL_FIELDS)
    if unknown:
        raise SchemaError(entry_id, f"unknown fields {sorted(unknown)}")

    try:
        entry_id = int(entry_id)
    except (TypeError, ValueError) as e:
        message = f"id must be an integer, got {entry_id!r}"
        raise SchemaError(entry_id, message) from e

    return GoldEntry(**{**record, "id": entry_id})


def _check(entry: GoldEntry, registry: MacroRegistry):
    try:
        parse_tex(entry.corrected_tex, registry)
    except LatexError as e:
        raise ParseError(entry.id, f"corrected TeX does not parse: {e}") from e

    try:
        _ = entry.markup
    except MathMLError as e:
        raise ParseError(entry.id, f"gold MathML does not parse: {e}") from e


def load_gold(
    path: pathlib.Path, registry: Optional[MacroRegistry] = None
) -> List[GoldEntry]:
    """
    Read and validate a gold file. Entries are returned sorted by id.
    """
    registry = registry if registry is not None else default_registry()
    entries = {}

    with pathlib.Path(path).open("r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue

            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise SchemaError(None, f"line {line_number} is not JSON: {e}") from e

            entry = _entry(record, line_number)

            if entry.id in entries:
                raise SchemaError(entry.id, "duplicate id")

            _check(entry, registry)
            entries[entry.id] = entry

    log.debug(f"loaded {len(entries)} gold entries from {path}")

    return [entries[i] for i in sorted(entries)]


def write_gold(entries: List[GoldEntry], path: pathlib.Path):
    with pathlib.Path(path).open("w", encoding="utf-8") as f:
        for entry in entries:
            f.write(json.dumps(entry.to_record(), ensure_ascii=False) + "\n")


def default_gold() -> List[GoldEntry]:
    return load_gold(resource_path(GOLD_FILE))


def function_gold() -> List[GoldEntry]:
    return load_gold(resource_path(FUNCTION_GOLD_FILE))

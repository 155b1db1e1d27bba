################################################################################
#
# Run converters over the gold standard and compare their output with the gold
# parallel markup.
#
# Author(s): Anonymous
################################################################################

import logging
import time

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence, Union

import tqdm

from src.bench.adapters import ConverterAdapter
from src.bench.converter import InternalConverter
from src.bench.gold import GoldEntry
from src.evaluation.cost_model import CostModel
from src.evaluation.errors import EmptyQuery, InvalidCostModel
from src.evaluation.shortcuts import ShortcutRule
from src.evaluation.similarity import (
    match_depth_score,
    mean_taxonomic_distance,
    query_coverage,
)
from src.evaluation.ted import ted
from src.mathml.markup import ParallelMarkup
from src.mathml.normalize import normalize_presentation
from src.mathml.reader import parse_mathml

log = logging.getLogger(__name__)

# the gold markup compared with itself
GOLD_CONVERTER = "gold"

Converter = Union[InternalConverter, ConverterAdapter, "GoldConverter"]

################################################################################
# results


@dataclass
class EvalResult:
    entry_id: int
    converter: str
    success: bool
    wall_time: float

    presentation_distance: Optional[float] = None

    # None when the converter emitted no content markup
    content_distance: Optional[float] = None

    query_coverage: Optional[float] = None
    match_depth: Optional[float] = None
    taxonomic_distance: Optional[float] = None

    error: Optional[str] = None

    def __post_init__(self):
        if self.wall_time < 0:
            raise ValueError(f"{self.wall_time=} must be non-negative")

        if not self.success:
            self.presentation_distance = None
            self.content_distance = None
            self.query_coverage = None
            self.match_depth = None
            self.taxonomic_distance = None

    def to_record(self) -> dict:
        return asdict(self)

    @classmethod
    def from_record(cls, record: dict) -> "EvalResult":
        return cls(**record)


################################################################################
# converters


class GoldConverter:
    """
    Replays the gold markup, so that a run reports the distances of the gold
    standard to itself.
    """

    name = GOLD_CONVERTER

    def convert_entry(self, entry: GoldEntry):
        return entry.markup, 0.0


def _convert(converter: Converter, entry: GoldEntry):
    """
    Convert the corrected TeX of `entry`; return the markup and the wall time.
    """
    if isinstance(converter, GoldConverter):
        return converter.convert_entry(entry)

    if isinstance(converter, InternalConverter):
        start = time.perf_counter()
        markup = converter.convert(entry.corrected_tex, entry.context_document)
        return markup, time.perf_counter() - start

    conversion = converter.convert(entry.corrected_tex)

    if not conversion.ok:
        raise _ConversionFailed(conversion.error, conversion.wall_time)

    return parse_mathml(conversion.mathml, strict=False), conversion.wall_time


class _ConversionFailed(Exception):
    def __init__(self, reason: str, wall_time: float):
        super().__init__(reason)
        self.wall_time = wall_time


################################################################################
# comparison


def evaluate_entry(
    entry: GoldEntry,
    converter: Converter,
    cm: CostModel,
    rules: Sequence[ShortcutRule] = (),
) -> EvalResult:
    """
    Convert one gold entry and compare the outcome with the gold markup. Every
    failure of the converter is recorded in the result, never raised.
    """
    start = time.perf_counter()

    try:
        markup, wall_time = _convert(converter, entry)
    except _ConversionFailed as e:
        log.warning(f"{converter.name} failed on entry {entry.id}: {e}")
        return EvalResult(entry.id, converter.name, False, e.wall_time, error=str(e))
    except Exception as e:
        # a converter bug must not abort the run
        wall_time = time.perf_counter() - start
        log.warning(f"{converter.name} failed on entry {entry.id}: {e}")
        return EvalResult(entry.id, converter.name, False, wall_time, error=str(e))

    if markup.presentation.token_count() == 0:
        log.warning(f"{converter.name} produced empty markup for entry {entry.id}")
        return EvalResult(
            entry.id, converter.name, False, wall_time, error="empty presentation"
        )

    return compare(entry.id, converter.name, wall_time, entry.markup, markup, cm, rules)


def compare(
    entry_id: int,
    converter: str,
    wall_time: float,
    gold: ParallelMarkup,
    markup: ParallelMarkup,
    cm: CostModel,
    rules: Sequence[ShortcutRule] = (),
) -> EvalResult:
    gold_presentation = normalize_presentation(gold.presentation)
    presentation = normalize_presentation(markup.presentation)

    result = EvalResult(
        entry_id,
        converter,
        True,
        wall_time,
        presentation_distance=ted(gold_presentation, presentation, cm),
    )

    if gold.content is not None and markup.content is not None:
        query, candidate = gold.content, markup.content
        result.content_distance = ted(query, candidate, cm, rules)
    else:
        query, candidate = gold_presentation, presentation

    try:
        result.query_coverage = query_coverage(query, candidate)
    except EmptyQuery:
        result.query_coverage = None

    result.match_depth = match_depth_score(query, candidate, cm)
    result.taxonomic_distance = mean_taxonomic_distance(query, candidate, cm=cm)

    return result


################################################################################
# the run


def run_eval(
    gold: Sequence[GoldEntry],
    adapters: Iterable[ConverterAdapter] = (),
    cm: Optional[CostModel] = None,
    internal: Optional[InternalConverter] = None,
    rules: Sequence[ShortcutRule] = (),
    jobs: int = 1,
    include_gold: bool = False,
    progress: bool = True,
) -> List[EvalResult]:
    """
    Evaluate every converter on every gold entry: the internal converter, the
    adapters and, with `include_gold`, the gold markup itself. Results are
    sorted by converter name and entry id.
    """
    cm = cm if cm is not None else CostModel.structural()

    if rules and not cm.shortcuts_enabled:
        raise InvalidCostModel(f"shortcut rules given but disabled in costs {cm.tag}")

    converters: List[Converter] = []

    if include_gold:
        converters.append(GoldConverter())

    converters.append(internal if internal is not None else InternalConverter())
    converters.extend(adapters)

    names = [c.name for c in converters]
    if len(set(names)) != len(names):
        raise ValueError(f"converter names must be unique, {names=}")

    tasks = [(entry, converter) for converter in converters for entry in gold]
    results: List[EvalResult] = []

    log.info(f"evaluating {names} on {len(gold)} entries with costs {cm.tag}")

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        futures = [
            pool.submit(evaluate_entry, entry, converter, cm, rules)
            for entry, converter in tasks
        ]

        for future in tqdm.tqdm(
            as_completed(futures), total=len(futures), disable=not progress
        ):
            results.append(future.result())

    return sorted(results, key=lambda r: (r.converter, r.entry_id))

################################################################################
#
# Rank identifier-definiens pairs found in the text around a formula.
#
# Noun phrases are found with a word list instead of a part-of-speech tagger:
# a phrase is a maximal run of content words within a sentence, where "of" may
# join two runs as in "speed of light". Every pair of an identifier occurrence
# and a phrase in its window is scored as
#
#   alpha * exp(-lambda_w * word distance)
#       + (1 - alpha) * exp(-lambda_f * formula distance)
#
# where the formula distance counts the formulae between the occurrence and
# the formula being converted.
#
# Author(s): Anonymous
################################################################################

import logging
import math

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from nltk.tokenize import RegexpTokenizer

from src.context.document import ContextDocument
from src.context.errors import NoContext
from src.context.symbols import identifiers as formula_identifiers
from src.latex.macros import MacroRegistry, default_registry
from src.latex.parser import parse_tex
from src.util.config_util import CastingConfig

log = logging.getLogger(__name__)

################################################################################
# configuration


@dataclass
class MLPConfig(CastingConfig):
    # weight of the word distance against the formula distance
    alpha: float = 0.75

    # decay per word between identifier and definiens
    lambda_w: float = 0.1

    # decay per formula between identifier and target formula
    lambda_f: float = 0.5

    # maximum word distance of a definiens
    window: int = 10

    # candidates scoring below are not considered highly ranked
    threshold: float = 0.5

    def __post_init__(self):
        super().__post_init__()

        if not 0 <= self.alpha <= 1:
            raise ValueError(f"{self.alpha=} must lie in [0, 1]")
        if self.lambda_w < 0 or self.lambda_f < 0:
            raise ValueError(
                f"decays must be non-negative, {self.lambda_w=}, {self.lambda_f=}"
            )
        if self.window < 1:
            raise ValueError(f"{self.window=} must be positive")


@dataclass(frozen=True)
class DefiniensCandidate:
    identifier: str
    definiens: str
    score: float
    distance_words: int
    distance_formulae: int

    def __post_init__(self):
        if not 0 <= self.score <= 1:
            raise ValueError(f"{self.score=} must lie in [0, 1]")


def score(distance_words: int, distance_formulae: int, cfg: MLPConfig) -> float:
    value = cfg.alpha * math.exp(-cfg.lambda_w * distance_words) + (
        1 - cfg.alpha
    ) * math.exp(-cfg.lambda_f * distance_formulae)

    return min(1.0, value)


################################################################################
# words

TOKENIZER = RegexpTokenizer(
    r"\$[^$]+\$|[^\W\d_]+(?:-[^\W\d_]+)*|\d+(?:\.\d+)?|[^\w\s]"
)

SENTENCE_ENDS = frozenset({".", "!", "?", ";", ":"})

# words which never start or continue a definiens
STOPWORDS = frozenset(
    """
    a an the this that these those its it their our his her
    is are was were be been being has have had do does
    denote denotes denoted denoting represent represents represented stand stands
    define defines defined call calls called write written writes let given
    map maps mapped equal equals
    where which who whose when while if then else so such as with without
    of for to in on at by from into onto over under between about than and or
    not no any all each every some we us one here there also only just
    use uses used using consider considered take takes let's
    """.split()
)

# single letter words which are not identifiers
NON_IDENTIFIER_WORDS = frozenset({"a", "A", "I"})


# words which join two content words into one phrase, as in "speed of light"
LINKING_WORDS = frozenset({"of"})


@dataclass(frozen=True)
class _Word:
    text: str
    start: int

    # index into the document formulae, None for plain words
    formula: Optional[int] = None

    @property
    def is_content(self) -> bool:
        return (
            self.formula is None
            and len(self.text) > 1
            and self.text.replace("-", "").isalpha()
            and self.text.lower() not in STOPWORDS
        )


def _sentences(doc: ContextDocument) -> List[List[_Word]]:
    formula_at = {f.position: i for i, f in enumerate(doc.formulae)}
    sentences: List[List[_Word]] = [[]]

    for start, end in TOKENIZER.span_tokenize(doc.text):
        text = doc.text[start:end]

        if text in SENTENCE_ENDS:
            sentences.append([])
        elif text.startswith("$"):
            formula = formula_at.get(start)
            sentences[-1].append(_Word(text[1:-1].strip(), start, formula))
        elif any(c.isalnum() for c in text):
            sentences[-1].append(_Word(text, start))

    return [s for s in sentences if s]


def _phrases(sentence: List[_Word]) -> List[Tuple[int, int]]:
    """
    The (first, last) word indices of the noun phrases of a sentence.
    """
    phrases = []
    first = None
    padded = sentence + [_Word("", -1)]

    for i, word in enumerate(padded):
        if word.is_content:
            first = i if first is None else first
        elif first is not None and _links(word, padded[i + 1 :]):
            continue
        elif first is not None:
            phrases.append((first, i - 1))
            first = None

    return phrases


def _links(word: _Word, rest: List[_Word]) -> bool:
    return (
        word.formula is None
        and word.text.lower() in LINKING_WORDS
        and bool(rest)
        and rest[0].is_content
    )


def _occurs(word: _Word, identifier: str) -> bool:
    if word.formula is not None:
        return word.text.replace(" ", "") == identifier.replace(" ", "")

    return (
        len(identifier) == 1
        and word.text == identifier
        and identifier not in NON_IDENTIFIER_WORDS
    )


################################################################################
# extraction


def extract_candidates(
    doc: ContextDocument,
    identifiers: Optional[Sequence[str]] = None,
    cfg: Optional[MLPConfig] = None,
    registry: Optional[MacroRegistry] = None,
) -> List[DefiniensCandidate]:
    """
    Rank the (identifier, definiens) pairs of the target formula of `doc`,
    best first. The identifiers default to those of the target formula. A
    document without text yields no candidates.
    """
    cfg = cfg if cfg is not None else MLPConfig()

    try:
        return _extract(doc, identifiers, cfg, registry)
    except NoContext:
        log.debug("no context text, no definiens candidates")
        return []


def _extract(
    doc: ContextDocument,
    identifiers: Optional[Sequence[str]],
    cfg: MLPConfig,
    registry: Optional[MacroRegistry],
) -> List[DefiniensCandidate]:
    if not doc.has_text:
        raise NoContext()

    if identifiers is None:
        if doc.target is None:
            raise NoContext()

        registry = registry if registry is not None else default_registry()
        tree = parse_tex(doc.target.tex, registry)
        identifiers = formula_identifiers(tree, registry)

    target = doc.target
    target_position = target.position if target is not None else len(doc.text)
    formula_positions = [f.position for f in doc.formulae]

    def formula_distance(position: int) -> int:
        low, high = sorted((position, target_position))
        return sum(1 for p in formula_positions if low < p < high)

    best: Dict[Tuple[str, str], DefiniensCandidate] = {}

    for sentence in _sentences(doc):
        phrases = _phrases(sentence)

        for index, word in enumerate(sentence):
            if word.formula is not None and word.formula == doc.target_index:
                continue

            for identifier in identifiers:
                if not _occurs(word, identifier):
                    continue

                distance_formulae = formula_distance(word.start)

                for first, last in phrases:
                    distance_words = min(abs(first - index), abs(last - index))

                    if distance_words > cfg.window:
                        continue

                    definiens = " ".join(w.text for w in sentence[first : last + 1])
                    candidate = DefiniensCandidate(
                        identifier,
                        definiens,
                        score(distance_words, distance_formulae, cfg),
                        distance_words,
                        distance_formulae,
                    )

                    key = (identifier, definiens.lower())
                    if key not in best or candidate.score > best[key].score:
                        best[key] = candidate

    candidates = sorted(
        best.values(), key=lambda c: (-c.score, c.identifier, c.definiens)
    )
    log.debug(f"found {len(candidates)} definiens candidates")

    return candidates

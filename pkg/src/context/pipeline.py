################################################################################
#
# Build the annotation map of a formula in three phases: rank definiens
# candidates in its textual context, filter them with the lexicon, and merge the
# outcome with the context-free readings of the remaining symbols. The
# contentizer consumes the map to refine the content tree.
#
# Author(s): Anonymous
################################################################################

import logging

from typing import Dict, Optional, Tuple

from src.context.candidates import MLPConfig, extract_candidates
from src.context.document import ContextDocument
from src.context.filtering import filter_with_lexicon
from src.context.symbols import identifiers, identify_symbols
from src.latex.macros import MacroRegistry, default_registry
from src.latex.parser import parse_tex
from src.semantics.annotation import Reading
from src.semantics.lexicon import Lexicon, default_lexicon
from src.tree import ExprTree

log = logging.getLogger(__name__)

################################################################################
# the annotation map


def annotate(
    doc: ContextDocument,
    lexicon: Optional[Lexicon] = None,
    registry: Optional[MacroRegistry] = None,
    cfg: Optional[MLPConfig] = None,
    formula: Optional[ExprTree] = None,
) -> Dict[str, Tuple[Reading, ...]]:
    """
    Return the readings of the tokens of the target formula of `doc`, keyed by
    TeX lexeme. Identifiers defined in the text get the single reading chosen
    from their highly ranked definiens candidates. Symbols keep their
    context-free lexicon readings and undefined identifiers get none.
    """
    lexicon = lexicon if lexicon is not None else default_lexicon()
    registry = registry if registry is not None else default_registry()
    cfg = cfg if cfg is not None else MLPConfig()

    if formula is None:
        if doc.target is None:
            return {}
        formula = parse_tex(doc.target.tex, registry)

    names = identifiers(formula, registry)
    annotations: Dict[str, Tuple[Reading, ...]] = {}

    # plain identifiers are only annotated from their definiens
    for lexeme in sorted(identify_symbols(formula, registry)):
        readings = lexicon.lookup(lexeme)

        if readings:
            annotations[lexeme] = readings

    candidates = [
        c
        for c in extract_candidates(doc, names, cfg, registry)
        if c.score >= cfg.threshold
    ]

    for identifier, definition in filter_with_lexicon(candidates, lexicon).items():
        if definition.definiens is None:
            continue

        log.debug(f"{identifier} is defined as {definition.definiens!r}")
        annotations[identifier] = (definition.reading,)

    return annotations

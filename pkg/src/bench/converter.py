################################################################################
#
# The internal converter: TeX to parallel MathML in-process.
#
# Author(s): Anonymous
################################################################################

import logging

from dataclasses import dataclass, field
from typing import Optional

from src.content.contentizer import contentize
from src.content.refinement import RefinementConfig
from src.content.roles import lexicon_annotations
from src.context.candidates import MLPConfig
from src.context.document import ContextDocument
from src.context.pipeline import annotate
from src.latex.macros import MacroRegistry, default_registry
from src.latex.parser import parse_tex
from src.mathml.emitter import emit
from src.mathml.markup import ParallelMarkup, build_parallel_markup
from src.semantics.lexicon import Lexicon, default_lexicon
from src.tree import number_nodes
from src.util.config_util import CastingConfig

log = logging.getLogger(__name__)

INTERNAL_CONVERTER = "internal"

################################################################################
# configuration


@dataclass
class ConverterConfig(CastingConfig):
    refinement: RefinementConfig = field(default_factory=RefinementConfig)

    # derive a content tree, otherwise emit presentation markup only
    content: bool = True

    # read the definitions of identifiers from the context of a formula
    use_context: bool = True


################################################################################
# the converter


class InternalConverter:
    def __init__(
        self,
        cfg: Optional[ConverterConfig] = None,
        lexicon: Optional[Lexicon] = None,
        registry: Optional[MacroRegistry] = None,
        mlp: Optional[MLPConfig] = None,
        name: str = INTERNAL_CONVERTER,
    ):
        self.cfg = cfg if cfg is not None else ConverterConfig()
        self.lexicon = lexicon if lexicon is not None else default_lexicon()
        self.registry = registry if registry is not None else default_registry()
        self.mlp = mlp if mlp is not None else MLPConfig()
        self.name = name

    def convert(
        self, tex: str, context: Optional[ContextDocument] = None
    ) -> ParallelMarkup:
        """
        Parse `tex` and, unless disabled, derive its content tree. The tokens
        are annotated from the lexicon, refined by the definitions found in
        `context` when one is given.
        """
        presentation, _ = number_nodes(parse_tex(tex, self.registry))

        if not self.cfg.content:
            return build_parallel_markup(presentation)

        if context is not None and self.cfg.use_context:
            annotations = annotate(
                context, self.lexicon, self.registry, self.mlp, presentation
            )
        else:
            annotations = lexicon_annotations(presentation, self.lexicon, self.registry)

        content = contentize(
            presentation, annotations, self.cfg.refinement, self.registry
        )

        return build_parallel_markup(presentation, content)

    def to_mathml(self, tex: str, context: Optional[ContextDocument] = None) -> str:
        return emit(self.convert(tex, context))

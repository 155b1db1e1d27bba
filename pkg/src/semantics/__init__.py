from .annotation import (
    MATHML_CDS,
    MATHML_ELEMENTS,
    WIKIDATA_CD,
    Reading,
    Role,
    SemanticAnnotation,
)
from .lexicon import FormatError, Lexicon, default_lexicon, load_lexicon, lookup

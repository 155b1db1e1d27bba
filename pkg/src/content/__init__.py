from .errors import ContentError, AmbiguityUnresolved
from .refinement import RefinementConfig
from .nodes import (
    OPERATOR_CDS,
    AMBIGUOUS_CD,
    ci,
    cn,
    op,
    csymbol,
    ambiguous,
    annotated,
    make_apply,
    strip_internal,
)
from .roles import Annotations, check_unambiguous, lexicon_annotations, leaf_lexeme
from .invisible import (
    INVISIBLE_TIMES,
    FUNCTION_APPLICATION,
    disambiguate_invisible,
    group_fences,
)
from .einstein import detect_einstein
from .rules import apply_power_rule, apply_subscript_rule
from .special_heads import apply_special_heads
from .contentizer import contentize

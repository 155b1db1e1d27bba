from .cost_model import CostModel, cost_tag
from .errors import (
    EmptyQuery,
    InvalidCostModel,
    MetricError,
    RuleFormatError,
)
from .shortcuts import (
    ShortcutRule,
    default_equivalences,
    default_shortcuts,
    load_rules,
    parse_rules,
    rewrites,
)
from .similarity import (
    match_depth,
    match_depth_score,
    mean_taxonomic_distance,
    query_coverage,
)
from .taxonomy import (
    Taxonomy,
    TaxonomyNode,
    data_type_distance,
    default_taxonomy,
    default_type_taxonomy,
    load_taxonomy,
    taxonomic_distance,
)
from .ted import (
    ExprTreeConfig,
    equivalence_zero_check,
    structural_ted,
    ted,
    ted_mapping,
)

from .errors import BenchError, SchemaError, ParseError, EmptyResults
from .gold import (
    FORMULA_TYPES,
    GoldEntry,
    load_gold,
    write_gold,
    default_gold,
    function_gold,
)
from .adapters import (
    Conversion,
    ConverterAdapter,
    InputMode,
    load_adapters,
    adapters_from_records,
)
from .converter import INTERNAL_CONVERTER, ConverterConfig, InternalConverter
from .runner import (
    GOLD_CONVERTER,
    EvalResult,
    GoldConverter,
    compare,
    evaluate_entry,
    run_eval,
)
from .report import (
    read_results,
    results_frame,
    summarize,
    timing,
    plot_data,
    write_report,
    write_results,
)

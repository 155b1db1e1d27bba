################################################################################
#
# Tests of the gold standard, the converter adapters, the evaluation run and
# the report files.
#
# Author(s): Anonymous
################################################################################

import json
import sys

import pytest

from src.bench import (
    FORMULA_TYPES,
    GOLD_CONVERTER,
    ConverterAdapter,
    ConverterConfig,
    EmptyResults,
    EvalResult,
    InputMode,
    InternalConverter,
    ParseError,
    SchemaError,
    adapters_from_records,
    load_adapters,
    load_gold,
    plot_data,
    read_results,
    run_eval,
    summarize,
    timing,
    write_gold,
    write_report,
)
from src.content import RefinementConfig
from src.evaluation import CostModel, InvalidCostModel, default_shortcuts
from src.evaluation.ted import ted
from src.mathml import MATHML_NS

################################################################################
# helpers


def python_adapter(name, script, *extra, **kwargs) -> ConverterAdapter:
    return ConverterAdapter(name, [sys.executable, "-c", script, *extra], **kwargs)


def write_records(tmp_path, *records):
    path = tmp_path / "gold.jsonl"
    path.write_text(
        "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records),
        encoding="utf-8",
    )

    return path


def internal(refinement=None, use_context=True):
    cfg = ConverterConfig(
        refinement=refinement if refinement is not None else RefinementConfig(),
        use_context=use_context,
    )

    return InternalConverter(cfg)


ECHO_X = f"print(\"<math xmlns='{MATHML_NS}'><mi>x</mi></math>\")"
EMPTY = f"print(\"<math xmlns='{MATHML_NS}'/>\")"
CRASH = "import sys; sys.stderr.write('boom\\n'); sys.exit(3)"
SLEEP = "import time; time.sleep(10)"

################################################################################
# the gold standard


# every entry of the shipped gold standard
GOLD_IDS = list(range(1, 26))


def test_gold_fixture(gold):
    assert [e.id for e in gold] == GOLD_IDS
    assert {e.formula_type for e in gold} == set(FORMULA_TYPES)
    assert gold[0].name is not None


def test_gold_markup_has_content(gold):
    for entry in gold:
        assert entry.markup.content is not None, entry.id


@pytest.mark.parametrize("entry_id", GOLD_IDS)
def test_semantic_tex_reproduces_gold(gold, entry_id):
    (entry,) = [e for e in gold if e.id == entry_id]
    markup = internal().convert(entry.semantic_tex, entry.context_document)

    expected = entry.markup.content.without_attrs()
    actual = markup.content.without_attrs()

    assert ted(expected, actual) == 0, actual.to_bracket()


def test_undefined_identifiers_are_plain(gold):
    (quadratic,) = [e for e in gold if e.name == "quadratic formula"]
    content = internal(use_context=False).convert(quadratic.semantic_tex).content

    assert "Q2111" not in content.to_bracket()
    assert "{times{4}{a}{c}}" in content.to_bracket()


def test_write_and_load_gold(gold, tmp_path):
    path = tmp_path / "gold.jsonl"
    write_gold(gold[:3], path)

    assert load_gold(path) == gold[:3]


def test_empty_gold_file(tmp_path):
    assert load_gold(write_records(tmp_path)) == []


def test_blank_lines_are_skipped(gold, tmp_path):
    path = tmp_path / "gold.jsonl"
    path.write_text(
        "\n" + json.dumps(gold[0].to_record()) + "\n\n", encoding="utf-8"
    )

    assert [e.id for e in load_gold(path)] == [gold[0].id]


def test_entries_are_sorted(gold, tmp_path):
    path = write_records(tmp_path, gold[1].to_record(), gold[0].to_record())

    assert [e.id for e in load_gold(path)] == [gold[0].id, gold[1].id]


def test_bad_mathml(gold, tmp_path):
    record = {**gold[2].to_record(), "gold_mathml": "<math><mi>x</math>"}

    with pytest.raises(ParseError) as info:
        load_gold(write_records(tmp_path, record))

    assert info.value.entry_id == gold[2].id


@pytest.fixture
def record(gold):
    return gold[0].to_record()


def test_bad_corrected_tex(record, tmp_path):
    record["corrected_tex"] = r"\frac{a"

    with pytest.raises(ParseError) as info:
        load_gold(write_records(tmp_path, record))

    assert info.value.entry_id == record["id"]


def test_missing_field(record, tmp_path):
    del record["semantic_tex"]

    with pytest.raises(SchemaError):
        load_gold(write_records(tmp_path, record))


def test_unknown_field(record, tmp_path):
    record["author"] = "someone"

    with pytest.raises(SchemaError):
        load_gold(write_records(tmp_path, record))


def test_unknown_formula_type(record, tmp_path):
    record["formula_type"] = "theorem"

    with pytest.raises(SchemaError):
        load_gold(write_records(tmp_path, record))


def test_duplicate_id(record, tmp_path):
    with pytest.raises(SchemaError) as info:
        load_gold(write_records(tmp_path, record, record))

    assert info.value.entry_id == record["id"]


def test_context_document(functions):
    with_context = functions[3]
    doc = with_context.context_document

    assert doc.target.tex == with_context.corrected_tex
    assert functions[-1].context_document is None


################################################################################
# adapters


def test_adapter_validation():
    with pytest.raises(ValueError):
        ConverterAdapter("", ["tool"])

    with pytest.raises(ValueError):
        ConverterAdapter("tool", [])

    with pytest.raises(ValueError):
        ConverterAdapter("tool", ["tool"], timeout=0)

    assert ConverterAdapter("tool", ["tool"], input_mode="arg").input_mode == (
        InputMode.arg
    )


def test_adapter_argv():
    adapter = ConverterAdapter("tool", ["tool", "--tex={tex}"], input_mode="arg")

    assert adapter.argv("x^2") == ["tool", "--tex=x^2"]
    assert ConverterAdapter("tool", ["tool", "{tex}"]).argv("x") == ["tool", "{tex}"]


def test_adapter_output():
    conversion = python_adapter("echo", ECHO_X).convert("x")

    assert conversion.ok
    assert "<mi>x</mi>" in conversion.mathml
    assert conversion.wall_time > 0


def test_adapter_reads_stdin():
    script = "import sys; print(sys.stdin.read().strip()[::-1])"

    assert python_adapter("rev", script).convert("a+b").mathml.strip() == "b+a"


def test_adapter_argument_mode():
    adapter = python_adapter(
        "arg", "import sys; print(sys.argv[1])", "{tex}", input_mode="arg"
    )

    assert adapter.convert(r"\frac12").mathml.strip() == r"\frac12"


def test_adapter_crash():
    conversion = python_adapter("crash", CRASH).convert("x")

    assert not conversion.ok
    assert conversion.mathml is None
    assert conversion.error == "exit code 3: boom"


def test_adapter_silent_crash():
    conversion = python_adapter("crash", "import sys; sys.exit(2)").convert("x")

    assert conversion.error == "exit code 2: no diagnostic"


def test_adapter_timeout():
    conversion = python_adapter("slow", SLEEP, timeout=0.5).convert("x")

    assert not conversion.ok
    assert conversion.error == "timed out after 0.5s"
    assert conversion.wall_time >= 0.5


def test_missing_executable(tmp_path):
    conversion = ConverterAdapter("ghost", [str(tmp_path / "missing")]).convert("x")

    assert not conversion.ok
    assert conversion.error.startswith("could not start")


def test_load_adapters(tmp_path):
    path = tmp_path / "adapters.yaml"
    path.write_text(
        "converters:\n"
        "  - _target_: src.bench.adapters.ConverterAdapter\n"
        "    name: latexml\n"
        "    command: [latexmlmath, '-']\n"
        "  - name: mathpix\n"
        "    command: [mpx, '{tex}']\n"
        "    input_mode: arg\n"
        "    timeout: 5\n",
        encoding="utf-8",
    )
    adapters = load_adapters(path)

    assert [a.name for a in adapters] == ["latexml", "mathpix"]
    assert adapters[1].input_mode == InputMode.arg
    assert adapters[1].timeout == 5.0

    assert {a.timeout for a in load_adapters(path, timeout=2)} == {2.0}


def test_duplicate_adapter_names():
    records = [{"name": "a", "command": ["x"]}, {"name": "a", "command": ["y"]}]

    with pytest.raises(ValueError):
        adapters_from_records(records)


################################################################################
# the evaluation run


def test_gold_against_itself(gold):
    results = run_eval(gold, include_gold=True, progress=False)
    own = [r for r in results if r.converter == GOLD_CONVERTER]

    assert len(own) == len(gold)
    assert all(r.success for r in own)
    assert all(r.presentation_distance == 0 for r in own)
    assert all(r.content_distance == 0 for r in own)


def test_functions_are_applied(functions):
    results = run_eval(functions, progress=False)
    exact = {r.entry_id for r in results if r.content_distance == 0}

    assert exact == {1, 2, 3, 4}


def mean_content_distance(gold, refinement):
    results = run_eval(gold, internal=internal(refinement), progress=False)
    (row,) = summarize(results).itertuples()

    return row.mean_content_distance


def test_refinements_lower_content_distance(functions):
    refined = mean_content_distance(functions, RefinementConfig())
    plain = mean_content_distance(functions, RefinementConfig.none())

    assert 0 < refined < plain


def test_refinements_lower_gold_content_distance(gold):
    refined = mean_content_distance(gold, RefinementConfig())
    plain = mean_content_distance(gold, RefinementConfig.none())

    assert refined < plain


def test_failing_adapters_are_recorded(functions):
    adapters = [python_adapter("crash", CRASH), python_adapter("empty", EMPTY)]
    results = run_eval(functions[:2], adapters, progress=False)

    assert [(r.converter, r.entry_id) for r in results] == [
        ("crash", 1),
        ("crash", 2),
        ("empty", 1),
        ("empty", 2),
        ("internal", 1),
        ("internal", 2),
    ]

    crash, _, empty, _, ok, _ = results
    assert not crash.success
    assert crash.error == "exit code 3: boom"
    assert crash.presentation_distance is None
    assert empty.error == "empty presentation"
    assert ok.success
    assert ok.content_distance == 0


def test_timed_out_adapter_is_recorded(functions, tmp_path):
    adapters = [python_adapter("slow", SLEEP, timeout=0.5)]
    results = run_eval(functions[:2], adapters, jobs=2, progress=False)
    slow = [r for r in results if r.converter == "slow"]

    assert [r.entry_id for r in slow] == [1, 2]
    assert all(not r.success for r in slow)
    assert {r.error for r in slow} == {"timed out after 0.5s"}
    assert all(r.content_distance is None for r in slow)

    summary = summarize(results).set_index("converter")
    assert summary.loc["slow", "successes"] == 0
    assert summary.loc["internal", "successes"] == 2

    first = write_report(results, tmp_path / "first")
    second = write_report(list(reversed(results)), tmp_path / "second")
    assert first["summary.csv"].read_bytes() == second["summary.csv"].read_bytes()


def test_presentation_only_adapter(functions):
    results = run_eval(
        functions[:1], [python_adapter("echo", ECHO_X)], progress=False
    )
    echo = results[0]

    assert echo.converter == "echo"
    assert echo.success
    assert echo.content_distance is None
    assert echo.presentation_distance > 0
    assert 0 < echo.query_coverage < 1


def test_parallel_run_is_deterministic(functions):
    def distances(jobs):
        results = run_eval(functions, jobs=jobs, progress=False)
        return [(r.entry_id, r.content_distance) for r in results]

    assert distances(1) == distances(4)


def test_duplicate_converter_names(functions):
    with pytest.raises(ValueError):
        run_eval(functions, [python_adapter("internal", ECHO_X)], progress=False)


def test_rules_need_shortcut_costs(functions):
    with pytest.raises(InvalidCostModel):
        run_eval(functions, rules=default_shortcuts(), progress=False)


def test_shortcut_costs(functions):
    results = run_eval(
        functions[:1],
        cm=CostModel.with_shortcuts(),
        rules=default_shortcuts(),
        progress=False,
    )

    assert results[0].content_distance == 0


################################################################################
# results and reports


@pytest.fixture
def results():
    return [
        EvalResult(1, "b", True, 0.5, 2.0, 1.0, 0.5, 0.75, 0.25),
        EvalResult(2, "b", False, 1.5, error="exit code 1: boom"),
        EvalResult(1, "a", True, 0.25, 0.0, 0.0, 1.0, 1.0, 0.0),
    ]


def test_failures_carry_no_measures():
    result = EvalResult(1, "x", False, 0.1, presentation_distance=3.0)

    assert result.presentation_distance is None

    with pytest.raises(ValueError):
        EvalResult(1, "x", True, -1.0)


def test_summary(results):
    summary = summarize(results)

    assert list(summary.columns) == [
        "converter",
        "entries",
        "successes",
        "mean_presentation_distance",
        "mean_content_distance",
        "mean_query_coverage",
        "mean_match_depth",
        "mean_taxonomic_distance",
    ]
    assert summary["converter"].tolist() == ["a", "b"]
    assert summary["entries"].tolist() == [1, 2]
    assert summary["successes"].tolist() == [1, 1]
    assert summary["mean_presentation_distance"].tolist() == [0.0, 2.0]


def test_timing(results):
    table = timing(results).set_index("converter")

    assert table.loc["b", "total_wall_time"] == pytest.approx(2.0)
    assert table.loc["b", "mean_wall_time"] == pytest.approx(1.0)


def test_plot_data(results):
    df = plot_data(results)

    assert list(df.columns) == [
        "entry_id",
        "converter",
        "presentation_distance",
        "content_distance",
        "success",
    ]
    assert df["converter"].tolist() == ["a", "b", "b"]


def test_empty_results():
    with pytest.raises(EmptyResults):
        summarize([])


def test_write_report(results, tmp_path):
    first = write_report(results, tmp_path / "first")
    second = write_report(list(reversed(results)), tmp_path / "second")

    assert set(first) == {
        "results.jsonl",
        "summary.csv",
        "timing.csv",
        "plot_distances.csv",
    }

    for name in first:
        assert first[name].read_bytes() == second[name].read_bytes(), name

    restored = read_results(first["results.jsonl"])
    assert restored == sorted(results, key=lambda r: (r.converter, r.entry_id))

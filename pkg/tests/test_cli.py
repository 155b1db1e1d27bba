################################################################################
#
# Tests of the command line interface and the hydra configuration.
#
# Author(s): Anonymous
################################################################################

import pytest

from click.testing import CliRunner

from src.cli import cost_overrides, load_config, main, refinement_overrides
from src.main import construct_converter, construct_cost_model, gold_path
from src.resources import FUNCTION_GOLD_FILE, resource_path

################################################################################
# configuration


def test_default_config():
    cfg = load_config()

    assert cfg.include_gold
    assert cfg.content
    assert cfg.data.name == "fixture"
    assert list(cfg.adapters.converters) == []
    assert construct_cost_model(cfg).rename == 0


def test_cost_overrides():
    cm = construct_cost_model(load_config(cost_overrides("1,1,0.75,0.5")))

    assert cm.shortcuts_enabled
    assert cm.rename == 0.75


def test_refinement_overrides():
    converter = construct_converter(load_config(refinement_overrides("power")))

    assert converter.cfg.refinement.power_rule
    assert not converter.cfg.refinement.function_apply_rule


def test_functions_data():
    cfg = load_config(["data=functions"])

    assert gold_path(cfg) == resource_path(FUNCTION_GOLD_FILE)


################################################################################
# convert


@pytest.fixture
def runner():
    return CliRunner()


def test_convert(runner, riemann_tex):
    result = runner.invoke(main, ["convert", riemann_tex])

    assert result.exit_code == 0, result.output
    assert "Q187235" in result.output
    assert "annotation-xml" in result.output


def test_convert_presentation_only(runner):
    result = runner.invoke(main, ["convert", "--no-content", "a+b"])

    assert result.exit_code == 0, result.output
    assert "annotation-xml" not in result.output


def test_convert_with_context(runner, tmp_path):
    context = tmp_path / "context.txt"
    context.write_text("where E denotes the energy", encoding="utf-8")

    result = runner.invoke(main, ["convert", "--context", str(context), "E=mc^2"])

    assert result.exit_code == 0, result.output
    assert "Q11379" in result.output


def test_empty_input(runner):
    result = runner.invoke(main, ["convert", "  "])

    assert result.exit_code == 2
    assert "empty input" in result.output


def test_unknown_refinement(runner):
    result = runner.invoke(main, ["convert", "--refine", "magic", "x"])

    assert result.exit_code == 1
    assert "unknown refinement flags" in result.output


def test_tex_error(runner):
    result = runner.invoke(main, ["convert", r"\frac{a"])

    assert result.exit_code == 1


################################################################################
# eval and report


def test_eval_and_report(runner, tmp_path):
    out = tmp_path / "report"
    result = runner.invoke(
        main,
        [
            "eval",
            "--gold",
            str(resource_path(FUNCTION_GOLD_FILE)),
            "--jobs",
            "1",
            "--out",
            str(out),
            "--no-progress",
        ],
    )

    assert result.exit_code == 0, result.output
    assert "report written to" in result.output
    assert "internal" in result.output
    assert (out / "summary.csv").is_file()

    rewritten = tmp_path / "rewritten"
    result = runner.invoke(
        main, ["report", str(out / "results.jsonl"), "--out", str(rewritten)]
    )

    assert result.exit_code == 0, result.output
    assert (rewritten / "summary.csv").read_text() == (out / "summary.csv").read_text()


def test_invalid_costs(runner, tmp_path):
    result = runner.invoke(
        main, ["eval", "--costs", "1,1", "--out", str(tmp_path), "--no-progress"]
    )

    assert result.exit_code == 1
    assert "costs" in result.output


################################################################################
# fixture


def test_fixture(runner, tmp_path):
    result = runner.invoke(main, ["fixture", str(tmp_path)])

    assert result.exit_code == 0, result.output
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "functions.jsonl",
        "gold.jsonl",
        "lexicon.tsv",
    ]

    result = runner.invoke(main, ["fixture", str(tmp_path)])

    assert result.exit_code == 1
    assert "use --force to overwrite" in result.output

    result = runner.invoke(main, ["fixture", "--force", str(tmp_path)])

    assert result.exit_code == 0, result.output

################################################################################
#
# The `math-bench` command line interface. Every verb composes the hydra
# configuration tree under `config/` and turns its flags into overrides.
#
# Author(s): Anonymous
################################################################################

import logging
import pathlib
import shutil

from typing import List, Optional

import click

from hydra import compose, initialize_config_dir
from hydra.errors import HydraException
from omegaconf import DictConfig

from src.content.refinement import RefinementConfig
from src.context.document import ContextDocument
from src.evaluation.cost_model import CostModel
from src.resources import (
    FUNCTION_GOLD_FILE,
    GOLD_FILE,
    LEXICON_FILE,
    resource_path,
)
from src.util.hydra_resolvers import register_resolvers

log = logging.getLogger(__name__)

CONFIG_DIR = pathlib.Path(__file__).parent.parent / "config"
CONFIG_NAME = "eval"

################################################################################
# configuration


def _quote(value) -> str:
    text = str(value).replace("\\", "\\\\").replace("'", "\\'")
    return f"'{text}'"


def cost_overrides(costs: str) -> List[str]:
    cm = CostModel.parse(costs)

    return [
        f"costs.insert={cm.insert}",
        f"costs.delete={cm.delete}",
        f"costs.rename={cm.rename}",
        f"costs.shortcut={cm.shortcut}",
        f"costs.shortcuts_enabled={str(cm.shortcuts_enabled).lower()}",
    ]


def refinement_overrides(flags: str) -> List[str]:
    refinement = RefinementConfig.from_flags(flags)

    return [
        f"refinement.power_rule={str(refinement.power_rule).lower()}",
        f"refinement.subscript_rule={str(refinement.subscript_rule).lower()}",
        f"refinement.function_apply_rule="
        f"{str(refinement.function_apply_rule).lower()}",
        f"refinement.einstein_detection="
        f"{str(refinement.einstein_detection).lower()}",
    ]


def adapter_overrides(adapters: str) -> List[str]:
    # a yaml file, otherwise an option of the `adapters` config group
    if pathlib.Path(adapters).is_file():
        return [f"adapters.path={_quote(pathlib.Path(adapters).absolute())}"]

    return [f"adapters={adapters}"]


def load_config(overrides: Optional[List[str]] = None) -> DictConfig:
    register_resolvers()

    with initialize_config_dir(config_dir=str(CONFIG_DIR), version_base=None):
        return compose(config_name=CONFIG_NAME, overrides=list(overrides or []))


def _overrides(
    costs=None,
    refine=None,
    lexicon=None,
    gold=None,
    shortcuts=None,
    adapters=None,
    jobs=None,
    timeout=None,
    no_content=False,
) -> List[str]:
    overrides = []

    if costs is not None:
        overrides += cost_overrides(costs)
    if refine is not None:
        overrides += refinement_overrides(refine)
    if lexicon is not None:
        overrides.append(f"lexicon={_quote(lexicon.absolute())}")
    if gold is not None:
        overrides.append(f"data.path={_quote(gold.absolute())}")
    if shortcuts is not None:
        overrides.append(f"shortcuts={_quote(shortcuts.absolute())}")
    if adapters is not None:
        overrides += adapter_overrides(adapters)
    if jobs is not None:
        overrides.append(f"jobs={jobs}")
    if timeout is not None:
        overrides.append(f"timeout={timeout}")
    if no_content:
        overrides.append("content=false")

    return overrides


def _fail(e: Exception):
    raise click.ClickException(str(e)) from e


existing_file = click.Path(exists=True, dir_okay=False, path_type=pathlib.Path)

################################################################################
# the command group


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="log progress at INFO level")
def main(verbose: bool):
    """Convert TeX to parallel MathML and benchmark converters."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="[%(asctime)s][%(name)s][%(levelname)s] - %(message)s",
    )


@main.command()
@click.argument("tex")
@click.option("--refine", help="refinements, e.g. `power,subscript`, `all`, `none`")
@click.option("--lexicon", type=existing_file, help="lexicon file (tsv)")
@click.option("--context", "context_file", type=existing_file, help="text or XHTML")
@click.option("--no-content", is_flag=True, help="emit presentation markup only")
def convert(tex, refine, lexicon, context_file, no_content):
    """Print the parallel MathML of TEX."""
    from src.main import construct_converter

    if not tex.strip():
        raise click.UsageError("empty input")

    try:
        overrides = _overrides(refine=refine, lexicon=lexicon, no_content=no_content)
        cfg = load_config(overrides)
        converter = construct_converter(cfg)
    except (HydraException, ValueError, OSError) as e:
        _fail(e)

    context = None
    if context_file is not None:
        text = context_file.read_text(encoding="utf-8")

        if context_file.suffix.lower() in (".xhtml", ".html", ".xml"):
            context = ContextDocument.from_xhtml(text, target=tex)
        else:
            context = ContextDocument.from_text(text, target=tex)

    try:
        mathml = converter.to_mathml(tex, context)
    except ValueError as e:
        _fail(e)

    click.echo(mathml)


@main.command(name="eval")
@click.option("--gold", type=existing_file, help="gold file (jsonl)")
@click.option("--adapters", help="adapter yaml file or adapters config option")
@click.option("--costs", help="i,d,r or i,d,r,e; four values enable shortcuts")
@click.option("--shortcuts", type=existing_file, help="shortcut rule file")
@click.option("--refine", help="refinements, e.g. `power,subscript`, `all`, `none`")
@click.option("--lexicon", type=existing_file, help="lexicon file (tsv)")
@click.option("--jobs", type=click.IntRange(min=1), help="worker threads")
@click.option("--timeout", type=click.FloatRange(min=0, min_open=True))
@click.option("--no-content", is_flag=True, help="skip content trees")
@click.option("--out", type=click.Path(file_okay=False, path_type=pathlib.Path))
@click.option("--progress/--no-progress", default=True)
def evaluate(
    gold,
    adapters,
    costs,
    shortcuts,
    refine,
    lexicon,
    jobs,
    timeout,
    no_content,
    out,
    progress,
):
    """Evaluate the converters on a gold standard and write a report."""
    from src.bench.report import summarize
    from src.main import evaluate as run

    try:
        overrides = _overrides(
            costs=costs,
            refine=refine,
            lexicon=lexicon,
            gold=gold,
            shortcuts=shortcuts,
            adapters=adapters,
            jobs=jobs,
            timeout=timeout,
            no_content=no_content,
        )
        overrides.append(f"progress={str(progress).lower()}")

        if out is not None:
            overrides.append(f"out_dir={_quote(out.absolute())}")

        results, out_dir = run(load_config(overrides))
    except (HydraException, ValueError, OSError) as e:
        _fail(e)

    click.echo(summarize(results).to_string(index=False))
    click.echo(f"report written to {out_dir}")


@main.command()
@click.argument("results", type=existing_file)
@click.option("--out", type=click.Path(file_okay=False, path_type=pathlib.Path))
def report(results, out):
    """Rewrite the report files of a RESULTS jsonl file."""
    from src.bench.report import read_results, summarize, write_report

    out = out if out is not None else results.parent

    try:
        loaded = read_results(results)
        write_report(loaded, out)
    except (ValueError, TypeError, KeyError) as e:
        _fail(e)

    click.echo(summarize(loaded).to_string(index=False))


@main.command()
@click.argument("directory", type=click.Path(file_okay=False, path_type=pathlib.Path))
@click.option("--force", is_flag=True, help="overwrite existing files")
def fixture(directory, force):
    """Write the bundled gold fixtures and lexicon to DIRECTORY."""
    directory.mkdir(parents=True, exist_ok=True)

    for name in (GOLD_FILE, FUNCTION_GOLD_FILE, LEXICON_FILE):
        target = directory / name

        if target.exists() and not force:
            raise click.ClickException(f"{target} exists, use --force to overwrite")

        shutil.copyfile(resource_path(name), target)
        click.echo(f"wrote {target}")


if __name__ == "__main__":
    main()

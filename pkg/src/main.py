################################################################################
#
# This file is the main entrypoint of the evaluation based on the hydra
# configuration.
#
# Author(s): Anonymous
################################################################################

import logging
import pathlib

from typing import List, Optional

from omegaconf import DictConfig, OmegaConf
from hydra.utils import instantiate

from src.bench.adapters import ConverterAdapter, adapters_from_records, load_adapters
from src.bench.converter import ConverterConfig, InternalConverter
from src.bench.gold import GoldEntry, load_gold
from src.bench.report import summarize, write_report
from src.bench.runner import run_eval
from src.context.candidates import MLPConfig
from src.content.refinement import RefinementConfig
from src.evaluation.cost_model import CostModel
from src.evaluation.shortcuts import ShortcutRule, load_rules
from src.latex.macros import MacroRegistry, default_registry
from src.resources import resource_path
from src.semantics.lexicon import Lexicon, default_lexicon, load_lexicon
from src.util.system import allocated_cpus, get_git_revision_hash, log_cpu_info

log = logging.getLogger(__name__)

################################################################################
# implement constructing the parts of a run


def construct_cost_model(cfg: DictConfig) -> CostModel:
    cm = instantiate(cfg.costs)

    if not isinstance(cm, CostModel):
        raise ValueError(f"costs must configure a {CostModel}, got {cm}")

    return cm


def construct_rules(cfg: DictConfig) -> List[ShortcutRule]:
    if cfg.get("shortcuts", None) is None:
        return []

    return load_rules(pathlib.Path(cfg.shortcuts))


def construct_lexicon(cfg: DictConfig) -> Lexicon:
    if cfg.get("lexicon", None) is None:
        return default_lexicon()

    return load_lexicon(pathlib.Path(cfg.lexicon))


def construct_converter(
    cfg: DictConfig,
    lexicon: Optional[Lexicon] = None,
    registry: Optional[MacroRegistry] = None,
) -> InternalConverter:
    refinement = instantiate(cfg.refinement)
    mlp = instantiate(cfg.context)

    if not isinstance(refinement, RefinementConfig):
        raise ValueError(f"refinement must configure a {RefinementConfig}")
    if not isinstance(mlp, MLPConfig):
        raise ValueError(f"context must configure a {MLPConfig}")

    converter_cfg = ConverterConfig(
        refinement=refinement,
        content=cfg.content,
        use_context=cfg.use_context,
    )

    return InternalConverter(
        cfg=converter_cfg,
        lexicon=lexicon if lexicon is not None else construct_lexicon(cfg),
        registry=registry,
        mlp=mlp,
    )


def construct_adapters(cfg: DictConfig) -> List[ConverterAdapter]:
    adapters_cfg = cfg.adapters

    # a yaml file outside of the config tree
    if adapters_cfg.get("path", None) is not None:
        return load_adapters(pathlib.Path(adapters_cfg.path), timeout=cfg.timeout)

    records = OmegaConf.to_container(adapters_cfg.converters, resolve=True)

    return adapters_from_records(records, timeout=cfg.timeout)


def gold_path(cfg: DictConfig) -> pathlib.Path:
    if cfg.data.get("path", None) is not None:
        return pathlib.Path(cfg.data.path)

    return resource_path(cfg.data.resource)


def construct_gold(
    cfg: DictConfig, registry: Optional[MacroRegistry] = None
) -> List[GoldEntry]:
    return load_gold(gold_path(cfg), registry)


def num_jobs(cfg: DictConfig) -> int:
    if cfg.get("jobs", None) is None:
        return allocated_cpus()

    return max(1, int(cfg.jobs))


################################################################################
# the evaluation


def evaluate(cfg: DictConfig):
    """
    Run the internal converter and the configured adapters over the gold
    standard. Returns the results and the directory the report was written to.
    """
    registry = default_registry()

    cm = construct_cost_model(cfg)
    rules = construct_rules(cfg)
    gold = construct_gold(cfg, registry)
    internal = construct_converter(cfg, registry=registry)
    adapters = construct_adapters(cfg)

    results = run_eval(
        gold,
        adapters,
        cm=cm,
        internal=internal,
        rules=rules,
        jobs=num_jobs(cfg),
        include_gold=cfg.include_gold,
        progress=cfg.progress,
    )

    out_dir = pathlib.Path(cfg.out_dir)
    write_report(results, out_dir)

    return results, out_dir


def run_eval_script(cfg: DictConfig):
    # print config
    print(OmegaConf.to_yaml(cfg))
    print(f"current git commit hash: {get_git_revision_hash()}")
    log_cpu_info()
    print()

    results, out_dir = evaluate(cfg)

    print(summarize(results).to_string(index=False))
    print(f"\nreport written to {out_dir}")

    return results

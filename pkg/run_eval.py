################################################################################
#
# This run script encapsulates the evaluation of the configured converters on
# a gold standard, defined by the hydra configuration.
#
# Author(s): Anonymous
################################################################################

import hydra

from dotenv import load_dotenv
from omegaconf import DictConfig

from src.util.hydra_resolvers import register_resolvers

################################################################################
# set custom resolvers

register_resolvers()

################################################################################
# wrap around main hydra script


@hydra.main(config_path="config", config_name="eval", version_base=None)
def run(cfg: DictConfig):
    # we import here such that tab-completion in bash
    # does not need to import everything (which slows it down
    # significantly)
    from src.main import run_eval_script

    return run_eval_script(cfg)


################################################################################
# execute hydra application

if __name__ == "__main__":
    load_dotenv()
    run()

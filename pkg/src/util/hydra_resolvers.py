################################################################################
#
# Custom resolvers for hydra configuration
#
# Author(s): Anonymous
################################################################################

import uuid

from src.evaluation.cost_model import cost_tag

################################################################################
# create a random UUID


def random_uuid() -> str:
    return uuid.uuid4().hex


################################################################################
# name a run after its cost model, e.g. i1-d1-r0


def cost_tag_resolver(insert, delete, rename) -> str:
    return cost_tag(insert, delete, rename)


################################################################################
# register the resolvers above, once per process


def register_resolvers():
    from omegaconf import OmegaConf

    if not OmegaConf.has_resolver("random_uuid"):
        # one uuid per config object, not per access
        OmegaConf.register_new_resolver("random_uuid", random_uuid, use_cache=True)

    if not OmegaConf.has_resolver("cost_tag"):
        OmegaConf.register_new_resolver("cost_tag", cost_tag_resolver)

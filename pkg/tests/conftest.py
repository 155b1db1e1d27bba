################################################################################
#
# Shared fixtures of the test suite.
#
# Author(s): Anonymous
################################################################################

import pytest

from src.bench.gold import default_gold, function_gold
from src.latex.macros import default_registry
from src.semantics.lexicon import default_lexicon

################################################################################
# formulae used across tests


@pytest.fixture(scope="session")
def riemann_tex():
    return r"\zeta(s) = 0 \Rightarrow \Re s = \frac12 \lor \Im s=0"


################################################################################
# bundled resources


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def gold():
    return default_gold()


@pytest.fixture(scope="session")
def functions():
    return function_gold()

################################################################################
#
# Locate the data files which ship with the package.
#
# Author(s): Anonymous
################################################################################

import pathlib

################################################################################
# paths to bundled resources

RESOURCE_DIR = pathlib.Path(__file__).parent.absolute()

LEXICON_FILE = "lexicon.tsv"
MACRO_FILE = "macros.yaml"
TAXONOMY_FILE = "taxonomy.yaml"
SHORTCUT_FILE = "shortcuts.txt"
EQUIVALENCE_FILE = "equivalences.txt"
GOLD_FILE = "gold.jsonl"
FUNCTION_GOLD_FILE = "functions.jsonl"


def resource_path(name: str) -> pathlib.Path:
    path = RESOURCE_DIR / name

    if not path.exists():
        raise FileNotFoundError(f"bundled resource {name} not found in {RESOURCE_DIR}")

    return path

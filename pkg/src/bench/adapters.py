################################################################################
#
# Third-party converters run as subprocesses. The wire protocol: TeX goes in on
# standard input (UTF-8, newline terminated) or as a command line argument,
# MathML comes out on standard output, a nonzero exit code is a failure. The
# wall time is measured around the process call and so includes the start-up
# time of the tool.
#
# Author(s): Anonymous
################################################################################

import logging
import pathlib
import subprocess
import time

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from omegaconf import OmegaConf

from src.util.config_util import CastingConfig

log = logging.getLogger(__name__)

# placeholder of the TeX input in argument mode
TEX_PLACEHOLDER = "{tex}"

DEFAULT_TIMEOUT = 30.0

################################################################################
# the outcome of a single conversion


@dataclass
class Conversion:
    # MathML on success, None on failure
    mathml: Optional[str]

    wall_time: float

    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.mathml is not None and self.error is None


################################################################################
# the adapter


class InputMode(str, Enum):
    stdin = "stdin"
    arg = "arg"


@dataclass
class ConverterAdapter(CastingConfig):
    name: str

    # argv of the converter, e.g. ["latexmlmath", "-"]
    command: List[str] = field(default_factory=list)

    input_mode: InputMode = InputMode.stdin

    # seconds per formula
    timeout: float = DEFAULT_TIMEOUT

    def __post_init__(self):
        super().__post_init__()

        if not self.name:
            raise ValueError("an adapter needs a name")
        if not self.command:
            raise ValueError(f"adapter {self.name} has no command")
        if self.timeout <= 0:
            raise ValueError(f"adapter {self.name}: {self.timeout=} must be positive")

    def argv(self, tex: str) -> List[str]:
        if self.input_mode == InputMode.arg:
            return [part.replace(TEX_PLACEHOLDER, tex) for part in self.command]

        return list(self.command)

    def convert(self, tex: str) -> Conversion:
        stdin = tex + "\n" if self.input_mode == InputMode.stdin else None
        start = time.perf_counter()

        try:
            process = subprocess.run(
                self.argv(tex),
                input=stdin,
                capture_output=True,
                text=True,
                encoding="utf-8",
                timeout=self.timeout,
            )
        except subprocess.TimeoutExpired:
            elapsed = time.perf_counter() - start
            return Conversion(None, elapsed, f"timed out after {self.timeout:g}s")
        except OSError as e:
            elapsed = time.perf_counter() - start
            message = f"could not start {self.command[0]}: {e}"
            return Conversion(None, elapsed, message)

        elapsed = time.perf_counter() - start

        if process.returncode != 0:
            stderr = process.stderr.strip().splitlines()
            reason = stderr[-1] if stderr else "no diagnostic"
            message = f"exit code {process.returncode}: {reason}"
            return Conversion(None, elapsed, message)

        return Conversion(process.stdout, elapsed)


################################################################################
# adapter files


def load_adapters(
    path: pathlib.Path, timeout: Optional[float] = None
) -> List[ConverterAdapter]:
    """
    Read a yaml file with a top-level `converters` list. Every record holds the
    fields of ConverterAdapter; `timeout` overrides the per-adapter timeouts.
    """
    cfg = OmegaConf.to_container(OmegaConf.load(str(path)), resolve=True)

    return adapters_from_records(cfg.get("converters", None) or [], timeout)


def adapters_from_records(records, timeout: Optional[float] = None):
    adapters = []

    for record in records:
        record = {k: v for k, v in dict(record).items() if k != "_target_"}

        if timeout is not None:
            record["timeout"] = timeout

        adapters.append(ConverterAdapter(**record))

    names = [a.name for a in adapters]
    duplicates = sorted({n for n in names if names.count(n) > 1})

    if duplicates:
        raise ValueError(f"adapter names must be unique, {duplicates=}")

    log.debug(f"configured adapters {names}")

    return adapters

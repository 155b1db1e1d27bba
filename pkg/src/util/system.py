################################################################################
#
# Process information recorded with every benchmark run: the cpus available to
# the converter worker pool and the git revision of the checkout.
#
# Author(s): Anonymous
################################################################################

import logging
import subprocess
import pathlib

import psutil

log = logging.getLogger(__name__)

################################################################################
# resource information


def allocated_cpus() -> int:
    proc = psutil.Process()

    try:
        cpu_affinity = proc.cpu_affinity()
    except AttributeError:
        # platforms without affinity support
        cpu_affinity = None

    if not cpu_affinity:
        return psutil.cpu_count() or 1

    return len(cpu_affinity)


def log_cpu_info():
    log.info(f"process has been allocated {allocated_cpus()} cpu(s)")


def get_git_revision_hash() -> str:
    cwd = pathlib.Path(__file__).parent.absolute()

    try:
        return (
            subprocess.check_output(
                ["git", "rev-parse", "HEAD"], cwd=cwd, stderr=subprocess.DEVNULL
            )
            .decode("ascii")
            .strip()
        )
    except (subprocess.CalledProcessError, OSError):
        return "no git directory found"

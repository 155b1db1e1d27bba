################################################################################
#
# Aggregate evaluation results into report files:
#
#   results.jsonl        one raw EvalResult per line
#   summary.csv          per converter mean distances and success count
#   timing.csv           per converter wall time
#   plot_distances.csv   per entry and converter distances, for plotting
#
# All files except the raw results and the timing are identical for identical
# inputs.
#
# Author(s): Anonymous
################################################################################

import json
import logging
import pathlib

from typing import Dict, List, Sequence

import pandas as pd

from src.bench.errors import EmptyResults
from src.bench.runner import EvalResult

log = logging.getLogger(__name__)

RESULTS_FILE = "results.jsonl"
SUMMARY_FILE = "summary.csv"
TIMING_FILE = "timing.csv"
PLOT_FILE = "plot_distances.csv"

FLOAT_FORMAT = "%.6f"

MEASURES = (
    "wall_time",
    "presentation_distance",
    "content_distance",
    "query_coverage",
    "match_depth",
    "taxonomic_distance",
)

################################################################################
# tables


def results_frame(results: Sequence[EvalResult]) -> pd.DataFrame:
    if not results:
        raise EmptyResults("no evaluation results to report")

    df = pd.DataFrame([r.to_record() for r in results])

    for column in MEASURES:
        df[column] = pd.to_numeric(df[column], errors="coerce")

    df = df.sort_values(["converter", "entry_id"], kind="mergesort")

    return df.reset_index(drop=True)


def summarize(results: Sequence[EvalResult]) -> pd.DataFrame:
    """
    One row per converter, sorted by name: the number of entries and of
    successful conversions, and the mean of every measure over the successful
    conversions.
    """
    df = results_frame(results)
    grouped = df.groupby("converter", sort=True)

    summary = pd.DataFrame(
        {
            "entries": grouped["entry_id"].count(),
            "successes": grouped["success"].sum().astype(int),
            "mean_presentation_distance": grouped["presentation_distance"].mean(),
            "mean_content_distance": grouped["content_distance"].mean(),
            "mean_query_coverage": grouped["query_coverage"].mean(),
            "mean_match_depth": grouped["match_depth"].mean(),
            "mean_taxonomic_distance": grouped["taxonomic_distance"].mean(),
        }
    )

    return summary.reset_index()


def timing(results: Sequence[EvalResult]) -> pd.DataFrame:
    df = results_frame(results)
    grouped = df.groupby("converter", sort=True)["wall_time"]

    return pd.DataFrame(
        {
            "total_wall_time": grouped.sum(),
            "mean_wall_time": grouped.mean(),
        }
    ).reset_index()


def plot_data(results: Sequence[EvalResult]) -> pd.DataFrame:
    df = results_frame(results)

    return df[
        [
            "entry_id",
            "converter",
            "presentation_distance",
            "content_distance",
            "success",
        ]
    ]


################################################################################
# files


def write_report(
    results: Sequence[EvalResult], out_dir: pathlib.Path
) -> Dict[str, pathlib.Path]:
    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    paths = {
        name: out_dir / name
        for name in (RESULTS_FILE, SUMMARY_FILE, TIMING_FILE, PLOT_FILE)
    }

    write_results(results, paths[RESULTS_FILE])

    summarize(results).to_csv(
        paths[SUMMARY_FILE], index=False, float_format=FLOAT_FORMAT
    )
    timing(results).to_csv(paths[TIMING_FILE], index=False, float_format=FLOAT_FORMAT)
    plot_data(results).to_csv(paths[PLOT_FILE], index=False, float_format=FLOAT_FORMAT)

    log.info(f"wrote report of {len(results)} results to {out_dir}")

    return paths


def write_results(results: Sequence[EvalResult], path: pathlib.Path):
    ordered = sorted(results, key=lambda r: (r.converter, r.entry_id))

    with pathlib.Path(path).open("w", encoding="utf-8") as f:
        for result in ordered:
            f.write(json.dumps(result.to_record(), ensure_ascii=False) + "\n")


def read_results(path: pathlib.Path) -> List[EvalResult]:
    with pathlib.Path(path).open("r", encoding="utf-8") as f:
        return [EvalResult.from_record(json.loads(line)) for line in f if line.strip()]

"""Run experiments and write their results to disk.

An experiment runs every variant with every seed. Each run gets its own
directory holding a metrics CSV and its snapshots; one comparison CSV
summarises the cluster counts of every variant at every checkpoint across
the seeds.

Runs may execute in worker processes, but every file is written from the
calling process in (variant, seed) order, so the output doesn't depend on
how many workers were used.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Typing extension imports.
from typing_extensions import Final

##############################################################################
# Local imports.
from .config import Algorithm, ExperimentSpec, SimConfig
from .engine import SimState, run
from .errors import SnapshotError
from .grid_world import Coord, GridWorld
from .metrics import ClusterReport

##############################################################################
log = logging.getLogger(__name__)

AGGREGATE_FILE: Final[str] = "comparison.csv"
"""The name of the comparison CSV in the output directory."""

METRICS_FILE: Final[str] = "metrics.csv"
"""The name of the per-run CSV in each run's directory."""

AGGREGATE_COLUMNS: Final[tuple[str, ...]] = (
    "variant",
    "iteration",
    "mean_clusters",
    "sd_clusters",
    "n_seeds",
)
"""The columns of the comparison CSV."""


##############################################################################
class SnapshotText(NamedTuple):
    """The text of a snapshot, ready to write."""

    grid: str
    """The grid, one character per cell."""

    ants: str
    """The ants, one `row,col,loaded` line each."""


class AntMark(NamedTuple):
    """An ant as recorded in a snapshot."""

    position: Coord
    """Where the ant was."""

    loaded: bool
    """Was it carrying an object?"""


class RunResult(NamedTuple):
    """Everything one run produced."""

    variant: Algorithm
    """The movement variant that was run."""

    seed: int
    """The seed it was run with."""

    reports: list[ClusterReport]
    """The checkpoint reports, then the final report."""

    snapshots: dict[int, SnapshotText]
    """The snapshots taken, by iteration."""


class AggregateRow(NamedTuple):
    """One row of the comparison CSV."""

    variant: Algorithm
    """The movement variant."""

    iteration: int
    """The checkpoint iteration."""

    mean_clusters: float
    """The mean total cluster count over the seeds."""

    sd_clusters: float
    """The sample standard deviation of the count; 0 for a single seed."""

    n_seeds: int
    """The number of seeds the figures are over."""


##############################################################################
def snapshot_text(state: SimState) -> SnapshotText:
    """Render a state in the snapshot formats.

    Args:
        state: The state to render.

    Returns:
        The grid and ant listing text.
    """
    return SnapshotText(
        state.grid.to_text(),
        "".join(
            f"{ant.position.row},{ant.position.col},{int(ant.loaded)}\n"
            for ant in state.ants
        ),
    )


def ants_path(grid_path: Path) -> Path:
    """Get the location of the ant listing that goes with a grid snapshot.

    Args:
        grid_path: The location of the grid snapshot.

    Returns:
        The location of its ant listing.
    """
    return grid_path.with_suffix(".ants")


def write_snapshot(snapshot: SnapshotText, path: Path) -> None:
    """Write a snapshot and its ant listing.

    Args:
        snapshot: The snapshot to write.
        path: Where to write the grid; the ants go alongside.

    Raises:
        OSError: If either file can't be written.
    """
    path.write_text(snapshot.grid, encoding="utf-8", newline="\n")
    ants_path(path).write_text(snapshot.ants, encoding="utf-8", newline="\n")


def emit_snapshot(state: SimState, path: Path) -> None:
    """Write a snapshot of a state to disk.

    Args:
        state: The state to write.
        path: Where to write the grid; the ants go alongside.

    Raises:
        OSError: If either file can't be written.
    """
    write_snapshot(snapshot_text(state), path)


def load_snapshot(path: Path) -> tuple[GridWorld, list[AntMark]]:
    """Read a snapshot back from disk.

    Args:
        path: The location of the grid snapshot.

    Returns:
        The world, and the ants if an ant listing is alongside it.

    Raises:
        SnapshotError: If either file is malformed.
        OSError: If the grid file can't be read.
    """
    grid = GridWorld.from_text(path.read_text(encoding="utf-8"))
    ants: list[AntMark] = []
    listing = ants_path(path)
    if listing.exists():
        for number, line in enumerate(listing.read_text(encoding="utf-8").splitlines()):
            try:
                row, col, loaded = (int(part) for part in line.split(","))
            except ValueError:
                raise SnapshotError(
                    f"{listing}:{number + 1}: bad ant line {line!r}"
                ) from None
            if not (0 <= row < grid.height and 0 <= col < grid.width):
                raise SnapshotError(
                    f"{listing}:{number + 1}: ant at ({row}, {col}) is off the"
                    f" {grid.height}x{grid.width} grid"
                )
            if loaded not in (0, 1):
                raise SnapshotError(
                    f"{listing}:{number + 1}: loaded flag must be 0 or 1, not {loaded}"
                )
            ants.append(AntMark(Coord(row, col), loaded == 1))
    return grid, ants


##############################################################################
def metrics_columns(type_count: int) -> list[str]:
    """Get the columns of the per-run CSV.

    Args:
        type_count: The number of object types.

    Returns:
        The column names.
    """
    return [
        "iteration",
        "clusters_total",
        "clusters_red",
        "clusters_blue",
        *(f"clusters_type{kind}" for kind in range(2, type_count)),
        "largest_cluster",
        "carried_count",
    ]


def metrics_row(entry: ClusterReport) -> list[int]:
    """Turn a report into a per-run CSV row.

    Args:
        entry: The report.

    Returns:
        The row's values.
    """
    by_type = list(entry.clusters_by_type)
    by_type += [0] * (2 - len(by_type))
    return [
        entry.iteration,
        entry.clusters_total,
        *by_type,
        entry.largest_cluster,
        entry.carried_count,
    ]


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """Render rows as CSV text with Unix line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def metrics_csv(reports: Sequence[ClusterReport], type_count: int) -> str:
    """Render a run's reports as its metrics CSV.

    Args:
        reports: The run's reports.
        type_count: The number of object types.

    Returns:
        The CSV text.
    """
    return _csv_text(
        metrics_columns(type_count), (metrics_row(entry) for entry in reports)
    )


##############################################################################
def aggregate(results: Sequence[RunResult], base: SimConfig) -> list[AggregateRow]:
    """Summarise the cluster counts of each variant at each checkpoint.

    Args:
        results: The results of every run.
        base: The configuration shared by the runs.

    Returns:
        One row per variant per checkpoint. Without checkpoints, one row per
        variant for the final state.
    """
    checkpoints = len(base.checkpoint_iterations)
    variants = list(dict.fromkeys(result.variant for result in results))
    rows: list[AggregateRow] = []
    for variant in variants:
        runs = [result for result in results if result.variant is variant]
        for position in range(max(checkpoints, 1)):
            # Without checkpoints the only report is the final one.
            counts = np.array(
                [result.reports[position].clusters_total for result in runs],
                dtype=float,
            )
            rows.append(
                AggregateRow(
                    variant,
                    runs[0].reports[position].iteration,
                    float(counts.mean()),
                    float(counts.std(ddof=1)) if len(counts) > 1 else 0.0,
                    len(counts),
                )
            )
    return rows


def aggregate_csv(rows: Sequence[AggregateRow]) -> str:
    """Render the comparison rows as CSV.

    Args:
        rows: The rows.

    Returns:
        The CSV text.
    """
    return _csv_text(
        AGGREGATE_COLUMNS,
        (
            (
                row.variant.value,
                row.iteration,
                f"{row.mean_clusters:.6f}",
                f"{row.sd_clusters:.6f}",
                row.n_seeds,
            )
            for row in rows
        ),
    )


##############################################################################
def execute_run(
    base: SimConfig, variant: Algorithm, seed: int, snapshot_at: Sequence[int]
) -> RunResult:
    """Carry out a single run of an experiment.

    Args:
        base: The configuration shared by the experiment's runs.
        variant: The movement variant to run.
        seed: The seed to run with.
        snapshot_at: Iterations to snapshot at, besides the start and end.

    Returns:
        The run's reports and snapshots.
    """
    cfg = replace(base, algorithm=variant, seed=seed)
    wanted = (set(snapshot_at) | {0}) - {cfg.max_iter}
    snapshots: dict[int, SnapshotText] = {}

    def observe(state: SimState) -> None:
        if state.t in wanted:
            snapshots[state.t] = snapshot_text(state)

    final, reports = run(cfg, observe)
    snapshots[cfg.max_iter] = snapshot_text(final)
    log.info(
        "Finished %s seed %d: %d clusters after %d iterations",
        variant.value,
        seed,
        reports[-1].clusters_total,
        cfg.max_iter,
    )
    return RunResult(variant, seed, reports, dict(sorted(snapshots.items())))


def _execute(task: tuple[SimConfig, Algorithm, int, tuple[int, ...]]) -> RunResult:
    """Unpack a task for a worker process."""
    return execute_run(*task)


##############################################################################
def run_directory(output_dir: Path, variant: Algorithm, seed: int) -> Path:
    """Get the directory a run's files go in.

    Args:
        output_dir: The experiment's output directory.
        variant: The run's variant.
        seed: The run's seed.

    Returns:
        The run's directory.
    """
    return output_dir / variant.value / f"seed-{seed}"


def snapshot_name(iteration: int, max_iter: int) -> str:
    """Get the file name of a snapshot.

    Args:
        iteration: The iteration the snapshot is of.
        max_iter: The last iteration of the run, to size the number.

    Returns:
        The file name.
    """
    return f"snapshot-t{iteration:0{len(str(max_iter))}d}.grid"


def write_run(result: RunResult, spec: ExperimentSpec) -> Path:
    """Write the files of one run.

    Args:
        result: The run's results.
        spec: The experiment it belongs to.

    Returns:
        The directory the files were written to.

    Raises:
        OSError: If anything can't be written.
    """
    location = run_directory(spec.output_dir, result.variant, result.seed)
    location.mkdir(parents=True, exist_ok=True)
    (location / METRICS_FILE).write_text(
        metrics_csv(result.reports, spec.base.type_count),
        encoding="utf-8",
        newline="\n",
    )
    for iteration, snapshot in result.snapshots.items():
        write_snapshot(
            snapshot, location / snapshot_name(iteration, spec.base.max_iter)
        )
    return location


def run_experiment(spec: ExperimentSpec) -> list[AggregateRow]:
    """Run every variant with every seed and write all the results.

    Args:
        spec: The experiment to run.

    Returns:
        The comparison rows that were written.

    Raises:
        OSError: If the output can't be written.
    """
    tasks = [
        (spec.base, variant, seed, spec.snapshot_at)
        for variant in spec.variants
        for seed in spec.seeds
    ]
    log.info(
        "Running %d variant(s) x %d seed(s) on %d worker(s)",
        len(spec.variants),
        len(spec.seeds),
        spec.jobs,
    )
    spec.output_dir.mkdir(parents=True, exist_ok=True)
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            results = list(pool.map(_execute, tasks))
    else:
        results = [_execute(task) for task in tasks]
    for result in results:
        write_run(result, spec)
    rows = aggregate(results, spec.base)
    (spec.output_dir / AGGREGATE_FILE).write_text(
        aggregate_csv(rows), encoding="utf-8", newline="\n"
    )
    log.info("Results written to %s", spec.output_dir)
    return rows


### harness.py ends here

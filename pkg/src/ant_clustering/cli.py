"""The command line interface for running clustering experiments."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
import logging
import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

##############################################################################
# Rich imports.
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

##############################################################################
# Local imports.
from . import __version__
from .config import Algorithm, ExperimentSpec, parse_config, parse_int_list
from .errors import AntClusteringError, ConfigError
from .harness import AggregateRow, run_experiment


##############################################################################
def _iterations(value: str) -> tuple[int, ...]:
    """Parse a `--snapshots` value."""
    try:
        return parse_int_list("--snapshots", value)
    except ConfigError as error:
        raise ArgumentTypeError(str(error)) from None


def build_parser() -> ArgumentParser:
    """Build the command line parser.

    Returns:
        The parser.
    """
    parser = ArgumentParser(
        prog="ant-clustering",
        description="Ant-based grid clustering, standard and hybrid.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    chatter = parser.add_mutually_exclusive_group()
    chatter.add_argument(
        "-v", "--verbose", action="store_true", help="Log progress in detail"
    )
    chatter.add_argument(
        "-q", "--quiet", action="store_true", help="Only log warnings and errors"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, summary in (
        ("run", "Run a single simulation"),
        ("compare", "Run the variants side by side over many seeds"),
    ):
        command = commands.add_parser(name, help=summary, description=summary)
        command.add_argument("config", type=Path, help="The experiment config file")
        command.add_argument("--seed", type=int, help="Run with this seed only")
        command.add_argument("--out", type=Path, help="Write results here")
        command.add_argument(
            "--snapshots",
            type=_iterations,
            help="Extra iterations to snapshot at, e.g. 100,500",
        )
        command.add_argument(
            "--variant",
            choices=[variant.value for variant in Algorithm],
            help="Run this movement variant only",
        )
        command.add_argument("--jobs", type=int, help="Worker processes to use")
    viewer = commands.add_parser(
        "view", help="Browse the snapshots of a results directory"
    )
    viewer.add_argument("directory", type=Path, help="The results directory")
    return parser


##############################################################################
def apply_overrides(spec: ExperimentSpec, arguments: Namespace) -> ExperimentSpec:
    """Apply the command line overrides to an experiment.

    Args:
        spec: The experiment as read from its config file.
        arguments: The parsed command line.

    Returns:
        The experiment to run.

    Raises:
        ConfigError: If the overridden experiment isn't valid.
    """
    changes: dict[str, object] = {}
    if arguments.command == "run":
        variant = Algorithm(arguments.variant or spec.base.algorithm)
        seed = spec.base.seed if arguments.seed is None else arguments.seed
        changes.update(
            base=replace(spec.base, algorithm=variant, seed=seed),
            variants=(variant,),
            seeds=(seed,),
        )
    else:
        if arguments.variant is not None:
            changes["variants"] = (Algorithm(arguments.variant),)
        if arguments.seed is not None:
            changes["seeds"] = (arguments.seed,)
    if arguments.out is not None:
        changes["output_dir"] = arguments.out
    if arguments.snapshots is not None:
        changes["snapshot_at"] = arguments.snapshots
    if arguments.jobs is not None:
        changes["jobs"] = arguments.jobs
    return replace(spec, **changes)


def summary_table(rows: Sequence[AggregateRow]) -> Table:
    """Build a console table of the comparison results.

    Args:
        rows: The comparison rows.

    Returns:
        A table with one row per checkpoint and one column per variant.
    """
    variants = list(dict.fromkeys(row.variant for row in rows))
    table = Table(title="Mean clusters (± sd)")
    table.add_column("Iteration", justify="right")
    for variant in variants:
        table.add_column(variant.value, justify="right")
    cells = {(row.variant, row.iteration): row for row in rows}
    for iteration in dict.fromkeys(row.iteration for row in rows):
        table.add_row(
            str(iteration),
            *(
                f"{cells[variant, iteration].mean_clusters:.1f}"
                f" ± {cells[variant, iteration].sd_clusters:.1f}"
                if (variant, iteration) in cells
                else "-"
                for variant in variants
            ),
        )
    return table


def _setup_logging(arguments: Namespace) -> None:
    """Send log output to the terminal, via Rich."""
    level = logging.INFO
    if arguments.verbose:
        level = logging.DEBUG
    elif arguments.quiet:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
    )


##############################################################################
def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface.

    Args:
        argv: The arguments; those of the process if not given.

    Returns:
        The exit status: 0 on success, 2 for configuration errors and 1 for
        any other failure.
    """
    arguments = build_parser().parse_args(argv)
    _setup_logging(arguments)
    errors = Console(stderr=True)
    try:
        if arguments.command == "view":
            # Only pull in the TUI when it's wanted.
            from .viewer import SnapshotViewer

            SnapshotViewer(arguments.directory).run()
            return 0
        spec = apply_overrides(parse_config(arguments.config), arguments)
        rows = run_experiment(spec)
    except ConfigError as error:
        errors.print(
            f"[bold red]Configuration error:[/] {escape(str(error))}", highlight=False
        )
        return 2
    except (AntClusteringError, OSError) as error:
        errors.print(f"[bold red]Error:[/] {escape(str(error))}", highlight=False)
        return 1
    if arguments.command == "compare" and not arguments.quiet:
        Console().print(summary_table(rows))
    return 0


##############################################################################
if __name__ == "__main__":
    sys.exit(main())

### cli.py ends here

"""Ant-based clustering of typed objects on a toroidal grid.

Provides the standard ant clustering algorithm, where ants random-walk the
grid, and a hybrid variant where each ant's next location comes from
recombining and mutating the binary encoding of its current one.
"""

##############################################################################
# Python imports.
from importlib.metadata import PackageNotFoundError, version

######################################################################
# Main library information.
__author__ = "Dave Pearson"
__copyright__ = "Copyright 2025, Dave Pearson"
__credits__ = ["Dave Pearson"]
__maintainer__ = "Dave Pearson"
__email__ = "davep@davep.org"
try:
    __version__ = version("hybrid-ant-clustering")
except PackageNotFoundError:
    __version__ = "0.0.0"
__licence__ = "MIT"

##############################################################################
# Local imports.
from .config import Algorithm, ExperimentSpec, SimConfig, parse_config
from .engine import Ant, SimState, finalize, initialize, run, step
from .errors import (
    AntClusteringError,
    ConfigError,
    ConservationError,
    OccupancyError,
    SnapshotError,
)
from .grid_world import Coord, GridWorld
from .harness import emit_snapshot, load_snapshot, run_experiment
from .metrics import ClusterReport, label_clusters, report

##############################################################################
# Export the imports.
__all__ = [
    "Algorithm",
    "Ant",
    "AntClusteringError",
    "ClusterReport",
    "ConfigError",
    "ConservationError",
    "Coord",
    "ExperimentSpec",
    "GridWorld",
    "OccupancyError",
    "SimConfig",
    "SimState",
    "SnapshotError",
    "emit_snapshot",
    "finalize",
    "initialize",
    "label_clusters",
    "parse_config",
    "load_snapshot",
    "report",
    "run",
    "run_experiment",
    "step",
]

### __init__.py ends here

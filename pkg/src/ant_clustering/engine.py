"""The simulation engine: set up a world, run the ants over it, and report.

Each iteration visits the ants in id order. An ant first works out the
density of objects like the one it's concerned with around it; an unloaded
ant standing on an object may pick it up, a loaded ant standing on an empty
cell may drop its load. Either way it then moves: a one-cell random step for
the standard variant, a genetic-operator jump for the hybrid one. Updates are
in place, so each ant sees the world as the ants before it left it.

Random draws per iteration, in order, for each ant: one if a pick or drop is
decided, then one for a random step, or one plus `2B` for a genetic jump
(`2B` without crossover).
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
import logging
from dataclasses import dataclass
from typing import Callable, Optional

##############################################################################
# Local imports.
from .clustering_rules import (
    RuleParams,
    decide,
    density_from_count,
    drop_probability,
    pick_probability,
)
from .config import Algorithm, SimConfig
from .errors import ConservationError
from .grid_world import Coord, GridWorld, ObjectType
from .metrics import ClusterReport, report
from .movement import step_ga, step_random
from .randomness import RandomSource, UniformStream, scaled_index

##############################################################################
log = logging.getLogger(__name__)

Observer = Callable[["SimState"], None]
"""Type of a callable that gets to look at the state after every iteration."""


##############################################################################
@dataclass
class Ant:
    """An ant: a position, and maybe an object it carries."""

    ident: int
    """The id of the ant, in [0, N)."""

    position: Coord
    """The cell the ant is on."""

    load: Optional[ObjectType] = None
    """The type of the object the ant carries, or `None` if unloaded."""

    @property
    def loaded(self) -> bool:
        """Is the ant carrying an object?"""
        return self.load is not None


##############################################################################
@dataclass
class SimState:
    """Everything about a run in progress."""

    grid: GridWorld
    """The world."""

    ants: list[Ant]
    """The ants, in id order."""

    rng: RandomSource
    """The run's random stream."""

    t: int = 0
    """The number of iterations completed."""

    @property
    def carried(self) -> list[int]:
        """The types of all carried objects."""
        return [ant.load for ant in self.ants if ant.load is not None]


##############################################################################
def initialize(cfg: SimConfig, rng: Optional[RandomSource] = None) -> SimState:
    """Scatter the objects and ants of a run over a fresh world.

    Objects go first, in type order, each onto a uniformly chosen empty cell
    (re-drawing while the chosen cell is occupied). Ants follow, one draw
    each, and may land anywhere.

    Args:
        cfg: The configuration of the run.
        rng: The random stream to use; a fresh one seeded from the
            configuration if not given.

    Returns:
        The state at iteration 0.

    Raises:
        ConfigError: If the configuration isn't feasible.
    """
    cfg.validate()
    stream: RandomSource = UniformStream(cfg.seed) if rng is None else rng
    grid = GridWorld(cfg.height, cfg.width)
    cells = cfg.height * cfg.width
    for object_type, count in enumerate(cfg.objects_per_type):
        for _ in range(count):
            while True:
                cell = Coord(*divmod(scaled_index(stream.draw(), cells), cfg.width))
                if grid.is_empty(cell):
                    grid.place_object(cell, object_type)
                    break
    ants = [
        Ant(ident, Coord(*divmod(scaled_index(stream.draw(), cells), cfg.width)))
        for ident in range(cfg.ants)
    ]
    log.debug(
        "Initialised %dx%d world with %d ants and %d objects (seed %d)",
        cfg.height,
        cfg.width,
        cfg.ants,
        cfg.total_objects,
        cfg.seed,
    )
    return SimState(grid, ants, stream)


##############################################################################
def check_conservation(state: SimState, cfg: SimConfig) -> None:
    """Check that every object is either on the grid or carried.

    Args:
        state: The state to check.
        cfg: The configuration of the run.

    Raises:
        ConservationError: If any type's total differs from the configured count.
    """
    totals = state.grid.counts_by_type(cfg.type_count)
    for object_type in state.carried:
        totals[object_type] += 1
    if totals != list(cfg.objects_per_type):
        raise ConservationError(
            f"Object totals {totals} differ from configured"
            f" {list(cfg.objects_per_type)} at iteration {state.t}"
        )


def _density(
    grid: GridWorld, rules: RuleParams, cell: Coord, kind: ObjectType
) -> float:
    """The perceived density of one object type around a cell."""
    return density_from_count(
        grid.count_around(cell, rules.side, kind),
        rules.side * rules.side - 1,
        rules.normalized,
    )


##############################################################################
def step(state: SimState, cfg: SimConfig) -> SimState:
    """Run one iteration: every ant decides, then moves.

    Args:
        state: The state to advance; it is updated in place.
        cfg: The configuration of the run.

    Returns:
        The same state, one iteration on.

    Raises:
        ConservationError: If an object went missing or was duplicated.
    """
    grid = state.grid
    rng = state.rng
    width = cfg.genome_width
    ga = cfg.ga
    rules = cfg.rules
    for ant in state.ants:
        here = ant.position
        if ant.load is None:
            found = grid.object_at(here)
            if found is not None:
                chance = pick_probability(_density(grid, rules, here, found), rules.k1)
                if decide(chance, rng.draw()):
                    ant.load = grid.remove_object(here)
        elif grid.is_empty(here):
            chance = drop_probability(_density(grid, rules, here, ant.load), rules.k2)
            if decide(chance, rng.draw()):
                grid.place_object(here, ant.load)
                ant.load = None
        if cfg.algorithm is Algorithm.HACA:
            ant.position = step_ga(here, ga, rng, grid.dims, width)
        else:
            ant.position = step_random(
                here, rng.draw(), grid.dims, cfg.baseline_neighborhood
            )
    state.t += 1
    check_conservation(state, cfg)
    return state


##############################################################################
def finalize(state: SimState, cfg: SimConfig) -> SimState:
    """Make every loaded ant put its object down.

    Each loaded ant, in id order, drops its object on the empty cell nearest
    to it; on its own cell if that is empty.

    Args:
        state: The state at the end of the run; it is updated in place.
        cfg: The configuration of the run.

    Returns:
        The same state, with no objects carried.
    """
    for ant in state.ants:
        if ant.load is not None:
            target = state.grid.nearest_empty(ant.position)
            state.grid.place_object(target, ant.load)
            ant.load = None
    check_conservation(state, cfg)
    return state


def report_for(state: SimState, cfg: SimConfig) -> ClusterReport:
    """Measure the clusters of a state.

    Args:
        state: The state to measure.
        cfg: The configuration of the run.

    Returns:
        The cluster report for the state's current iteration.
    """
    return report(
        state.grid,
        state.ants,
        state.t,
        type_count=cfg.type_count,
        connectivity=cfg.cluster_connectivity,
        min_size=cfg.min_cluster_size,
    )


##############################################################################
def run(
    cfg: SimConfig,
    observer: Optional[Observer] = None,
    rng: Optional[RandomSource] = None,
) -> tuple[SimState, list[ClusterReport]]:
    """Run a simulation from start to finish.

    Exactly `max_iter` iterations are run. A report is taken at every
    checkpoint, and one more once the run has been finalized.

    Args:
        cfg: The configuration of the run.
        observer: Optional callable shown the state at iteration 0 and after
            every iteration (before finalization).
        rng: Optional random stream to use in place of a seeded one.

    Returns:
        The final state and the reports, in iteration order.
    """
    state = initialize(cfg, rng)
    checkpoints = set(cfg.checkpoint_iterations)
    reports: list[ClusterReport] = []
    if observer is not None:
        observer(state)
    while state.t < cfg.max_iter:
        step(state, cfg)
        if observer is not None:
            observer(state)
        if state.t in checkpoints:
            reports.append(report_for(state, cfg))
            log.debug(
                "%s seed %d t=%d clusters=%d carried=%d",
                cfg.algorithm.value,
                cfg.seed,
                state.t,
                reports[-1].clusters_total,
                reports[-1].carried_count,
            )
    finalize(state, cfg)
    reports.append(report_for(state, cfg))
    return state, reports


### engine.py ends here

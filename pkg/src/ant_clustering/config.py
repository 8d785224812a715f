"""Simulation and experiment configuration, and the config file reader.

A config file is flat `key = value` text, one setting per line, with `#`
starting a comment. Every key is optional apart from the grid size, the ant
count and the object counts; anything left out takes its documented default.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Optional

##############################################################################
# Typing extension imports.
from typing_extensions import Final

##############################################################################
# Local imports.
from .clustering_rules import DEFAULT_K1, DEFAULT_K2, RuleParams
from .errors import ConfigError
from .grid_world import MAX_TYPES
from .movement import BaselineNeighborhood, GaParams, genome_width

##############################################################################
log = logging.getLogger(__name__)

DEFAULT_CHECKPOINT_EVERY: Final[int] = 100
"""The default spacing of checkpoints, in iterations."""

DEFAULT_SEEDS: Final[tuple[int, ...]] = tuple(range(20))
"""The seeds a comparison uses if none are given."""

MAX_SEED: Final[int] = 2**64
"""Seeds must be below this."""


##############################################################################
class Algorithm(str, Enum):
    """The ant movement variant."""

    ACA = "aca"
    """Standard clustering: ants random-walk one cell at a time."""

    HACA = "haca"
    """Hybrid clustering: ants jump by the genetic operators."""


##############################################################################
def _coerce(enum: type[Enum], key: str, value: Any) -> Any:
    """Coerce a raw value into a member of an enumeration.

    Args:
        enum: The enumeration.
        key: The configuration key being coerced, for error reporting.
        value: The raw value.

    Returns:
        The enumeration member.

    Raises:
        ConfigError: If the value isn't a member.
    """
    try:
        return enum(value)
    except ValueError:
        choices = ", ".join(str(member.value) for member in enum)
        raise ConfigError(key, value, f"must be one of {choices}") from None


##############################################################################
@dataclass(frozen=True)
class SimConfig:
    """Every parameter of a single simulation run.

    The configuration is validated on construction, so any instance that
    exists describes a feasible run.
    """

    height: int
    """The number of rows in the grid (Y)."""

    width: int
    """The number of columns in the grid (Z)."""

    ants: int
    """The number of ants (N)."""

    objects_per_type: tuple[int, ...]
    """How many objects of each type to place; its length is L."""

    side: int = 3
    """The side of the square neighborhood ants perceive (s)."""

    k1: float = DEFAULT_K1
    """The pick-up threshold constant."""

    k2: float = DEFAULT_K2
    """The drop-off threshold constant."""

    mutation_rate: Optional[float] = None
    """The per-bit mutation rate; `None` means one over the genome width."""

    crossover: bool = True
    """Should the genetic move recombine row and column bits?"""

    algorithm: Algorithm = Algorithm.HACA
    """The movement variant to run."""

    max_iter: int = 1000
    """The number of iterations to run for."""

    checkpoints: Optional[tuple[int, ...]] = None
    """The iterations to report at; `None` means every 100 iterations."""

    seed: int = 0
    """The seed for the run's random stream."""

    density_normalized: bool = True
    """Should the perceived density be a fraction rather than a count?"""

    baseline_neighborhood: BaselineNeighborhood = BaselineNeighborhood.MOORE
    """The steps a random-walking ant may take."""

    cluster_connectivity: int = 8
    """The adjacency used when counting clusters (8 or 4)."""

    min_cluster_size: int = 1
    """The smallest group of objects that is counted as a cluster."""

    def __post_init__(self) -> None:
        """Normalise the fields, then validate them."""
        object.__setattr__(
            self, "objects_per_type", tuple(int(n) for n in self.objects_per_type)
        )
        object.__setattr__(
            self, "algorithm", _coerce(Algorithm, "algorithm", self.algorithm)
        )
        object.__setattr__(
            self,
            "baseline_neighborhood",
            _coerce(
                BaselineNeighborhood,
                "baseline_neighborhood",
                self.baseline_neighborhood,
            ),
        )
        if self.checkpoints is not None:
            object.__setattr__(self, "checkpoints", tuple(self.checkpoints))
        self.validate()

    def validate(self) -> None:
        """Check every invariant of the configuration.

        Raises:
            ConfigError: Naming the first key found to be at fault.
        """
        if self.height < 1:
            raise ConfigError("height", self.height, "must be at least 1")
        if self.width < 1:
            raise ConfigError("width", self.width, "must be at least 1")
        if self.ants < 0:
            raise ConfigError("ants", self.ants, "must not be negative")
        if not 1 <= len(self.objects_per_type) <= MAX_TYPES:
            raise ConfigError(
                "objects",
                self.objects_per_type,
                f"must list between 1 and {MAX_TYPES} object types",
            )
        if any(count < 0 for count in self.objects_per_type):
            raise ConfigError(
                "objects", self.objects_per_type, "counts must not be negative"
            )
        if self.side < 3 or self.side % 2 == 0:
            raise ConfigError("neighborhood", self.side, "must be odd and at least 3")
        if self.side > min(self.height, self.width):
            raise ConfigError("neighborhood", self.side, "must fit within the grid")
        if not (math.isfinite(self.k1) and self.k1 > 0):
            raise ConfigError("k1", self.k1, "must be a finite positive number")
        if not (math.isfinite(self.k2) and self.k2 > 0):
            raise ConfigError("k2", self.k2, "must be a finite positive number")
        if self.mutation_rate is not None and not 0 <= self.mutation_rate <= 1:
            raise ConfigError("mutation_rate", self.mutation_rate, "must be in [0, 1]")
        if self.max_iter < 0:
            raise ConfigError("max_iter", self.max_iter, "must not be negative")
        if self.checkpoints is not None:
            if any(not 1 <= point <= self.max_iter for point in self.checkpoints):
                raise ConfigError(
                    "checkpoints", self.checkpoints, f"must lie in [1, {self.max_iter}]"
                )
            if list(self.checkpoints) != sorted(set(self.checkpoints)):
                raise ConfigError(
                    "checkpoints", self.checkpoints, "must be strictly increasing"
                )
        if not 0 <= self.seed < MAX_SEED:
            raise ConfigError("seed", self.seed, "must be an unsigned 64-bit integer")
        if self.cluster_connectivity not in (4, 8):
            raise ConfigError(
                "cluster_connectivity", self.cluster_connectivity, "must be 4 or 8"
            )
        if self.min_cluster_size not in (1, 2):
            raise ConfigError(
                "min_cluster_size", self.min_cluster_size, "must be 1 or 2"
            )
        if self.ants + self.total_objects >= self.height * self.width:
            raise ConfigError(
                "ants",
                self.ants,
                f"ants plus objects ({self.ants + self.total_objects}) must be less"
                f" than the number of cells ({self.height * self.width})",
            )

    @property
    def dims(self) -> tuple[int, int]:
        """The (height, width) of the grid."""
        return (self.height, self.width)

    @property
    def type_count(self) -> int:
        """The number of object types (L)."""
        return len(self.objects_per_type)

    @property
    def total_objects(self) -> int:
        """The total number of objects in the run."""
        return sum(self.objects_per_type)

    @property
    def genome_width(self) -> int:
        """The number of bits per coordinate in the genetic move (B)."""
        return genome_width(self.dims)

    @property
    def rules(self) -> RuleParams:
        """The pick-up and drop-off constants."""
        return RuleParams(self.k1, self.k2, self.side, self.density_normalized)

    @property
    def ga(self) -> GaParams:
        """The settings of the genetic move."""
        rate = self.mutation_rate
        if rate is None:
            rate = 1 / self.genome_width
        return GaParams(rate, self.crossover)

    @property
    def checkpoint_iterations(self) -> tuple[int, ...]:
        """The iterations at which to report."""
        if self.checkpoints is not None:
            return self.checkpoints
        return tuple(
            range(DEFAULT_CHECKPOINT_EVERY, self.max_iter + 1, DEFAULT_CHECKPOINT_EVERY)
        )


##############################################################################
@dataclass(frozen=True)
class ExperimentSpec:
    """A set of runs: every variant crossed with every seed."""

    base: SimConfig
    """The configuration shared by every run."""

    variants: tuple[Algorithm, ...] = (Algorithm.ACA, Algorithm.HACA)
    """The movement variants to compare."""

    seeds: tuple[int, ...] = DEFAULT_SEEDS
    """The seeds to run each variant with."""

    output_dir: Path = Path("results")
    """Where to write the results."""

    snapshot_at: tuple[int, ...] = ()
    """Iterations to snapshot at, on top of the initial and final states."""

    jobs: int = 1
    """How many worker processes to run the simulations on."""

    def __post_init__(self) -> None:
        """Normalise the fields and check the experiment makes sense."""
        object.__setattr__(
            self,
            "variants",
            tuple(_coerce(Algorithm, "variants", variant) for variant in self.variants),
        )
        object.__setattr__(self, "seeds", tuple(self.seeds))
        object.__setattr__(self, "snapshot_at", tuple(sorted(set(self.snapshot_at))))
        object.__setattr__(self, "output_dir", Path(self.output_dir))
        if not self.variants:
            raise ConfigError("variants", self.variants, "at least one is required")
        if len(set(self.variants)) != len(self.variants):
            raise ConfigError("variants", self.variants, "must not repeat")
        if not self.seeds:
            raise ConfigError("seeds", self.seeds, "at least one is required")
        if len(set(self.seeds)) != len(self.seeds):
            raise ConfigError("seeds", self.seeds, "must not repeat")
        for seed in self.seeds:
            if not 0 <= seed < MAX_SEED:
                raise ConfigError("seeds", seed, "must be an unsigned 64-bit integer")
        for point in self.snapshot_at:
            if not 0 <= point <= self.base.max_iter:
                raise ConfigError(
                    "snapshots", point, f"must lie in [0, {self.base.max_iter}]"
                )
        if self.jobs < 1:
            raise ConfigError("jobs", self.jobs, "must be at least 1")

    def config_for(self, variant: Algorithm, seed: int) -> SimConfig:
        """Get the configuration of one run of the experiment.

        Args:
            variant: The movement variant.
            seed: The seed.

        Returns:
            The run's configuration.
        """
        return replace(self.base, algorithm=variant, seed=seed)


##############################################################################
_TRUE: Final[frozenset[str]] = frozenset({"true", "yes", "on", "1"})
_FALSE: Final[frozenset[str]] = frozenset({"false", "no", "off", "0"})


def _as_int(key: str, value: str) -> int:
    """Parse a setting as an integer."""
    try:
        return int(value)
    except ValueError:
        raise ConfigError(key, value, "must be an integer") from None


def _as_float(key: str, value: str) -> float:
    """Parse a setting as a real number."""
    try:
        return float(value)
    except ValueError:
        raise ConfigError(key, value, "must be a number") from None


def _as_bool(key: str, value: str) -> bool:
    """Parse a setting as a flag; `true`, `yes`, `on` and `1` all mean true."""
    if value.lower() in _TRUE:
        return True
    if value.lower() in _FALSE:
        return False
    raise ConfigError(key, value, "must be true or false")


def parse_int_list(key: str, value: str) -> tuple[int, ...]:
    """Parse a comma list of integers, or an inclusive `a..b` range."""
    if ".." in value:
        start, _, end = value.partition("..")
        return tuple(range(_as_int(key, start.strip()), _as_int(key, end.strip()) + 1))
    return tuple(
        _as_int(key, item.strip()) for item in value.split(",") if item.strip()
    )


def _as_words(key: str, value: str) -> tuple[str, ...]:
    """Split a setting into its comma-separated words."""
    del key
    return tuple(item.strip() for item in value.split(",") if item.strip())


def _as_text(key: str, value: str) -> str:
    """Take a setting as it is."""
    del key
    return value


_PARSERS: Final[dict[str, Callable[[str, str], Any]]] = {
    "height": _as_int,
    "width": _as_int,
    "ants": _as_int,
    "objects": parse_int_list,
    "neighborhood": _as_int,
    "k1": _as_float,
    "k2": _as_float,
    "mutation_rate": _as_float,
    "crossover": _as_bool,
    "algorithm": _as_text,
    "max_iter": _as_int,
    "checkpoints": parse_int_list,
    "checkpoint_every": _as_int,
    "seed": _as_int,
    "seeds": parse_int_list,
    "variants": _as_words,
    "density_normalized": _as_bool,
    "baseline_neighborhood": _as_text,
    "cluster_connectivity": _as_int,
    "min_cluster_size": _as_int,
    "output_dir": _as_text,
    "snapshots": parse_int_list,
    "jobs": _as_int,
}
"""The parser for the value of each recognised key."""

_SIM_KEYS: Final[dict[str, str]] = {
    "height": "height",
    "width": "width",
    "ants": "ants",
    "objects": "objects_per_type",
    "neighborhood": "side",
    "k1": "k1",
    "k2": "k2",
    "mutation_rate": "mutation_rate",
    "crossover": "crossover",
    "algorithm": "algorithm",
    "max_iter": "max_iter",
    "checkpoints": "checkpoints",
    "seed": "seed",
    "density_normalized": "density_normalized",
    "baseline_neighborhood": "baseline_neighborhood",
    "cluster_connectivity": "cluster_connectivity",
    "min_cluster_size": "min_cluster_size",
}
"""Config file keys that map onto `SimConfig` fields."""

_REQUIRED: Final[tuple[str, ...]] = ("height", "width", "ants", "objects")
"""Keys that must be present in every config file."""


def read_settings(text: str) -> dict[str, Any]:
    """Read the settings out of config file text.

    Args:
        text: The content of the config file.

    Returns:
        The parsed value of every key given, by key.

    Raises:
        ConfigError: On malformed lines, unknown or repeated keys, or values
            that don't parse.
    """
    settings: dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, equals, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not equals or not key:
            raise ConfigError(f"line {number}", raw, "expected `key = value`")
        if key not in _PARSERS:
            raise ConfigError(key, value, "is not a recognised setting")
        if key in settings:
            raise ConfigError(key, value, "is given more than once")
        settings[key] = _PARSERS[key](key, value)
    return settings


def spec_from_settings(settings: dict[str, Any]) -> ExperimentSpec:
    """Build a validated experiment from parsed settings.

    Args:
        settings: The settings, as returned by `read_settings`.

    Returns:
        The experiment, with defaults filled in.

    Raises:
        ConfigError: If a required key is missing or any invariant fails.
    """
    for key in _REQUIRED:
        if key not in settings:
            raise ConfigError(key, None, "is required")
    if "checkpoints" in settings and "checkpoint_every" in settings:
        raise ConfigError(
            "checkpoint_every",
            settings["checkpoint_every"],
            "cannot be combined with checkpoints",
        )
    sim = {_SIM_KEYS[key]: value for key, value in settings.items() if key in _SIM_KEYS}
    if "checkpoint_every" in settings:
        every = settings["checkpoint_every"]
        if every < 1:
            raise ConfigError("checkpoint_every", every, "must be at least 1")
        sim["checkpoints"] = tuple(range(every, sim.get("max_iter", 1000) + 1, every))
    base = SimConfig(**sim)
    extra: dict[str, Any] = {}
    if "variants" in settings:
        extra["variants"] = settings["variants"]
    if "seeds" in settings:
        extra["seeds"] = settings["seeds"]
    if "output_dir" in settings:
        extra["output_dir"] = Path(settings["output_dir"])
    if "snapshots" in settings:
        extra["snapshot_at"] = settings["snapshots"]
    if "jobs" in settings:
        extra["jobs"] = settings["jobs"]
    return ExperimentSpec(base, **extra)


def parse_config(path: Path | str) -> ExperimentSpec:
    """Read and validate an experiment config file.

    Args:
        path: The location of the config file.

    Returns:
        The experiment it describes.

    Raises:
        ConfigError: If the file isn't UTF-8 text, or its content is invalid.
        OSError: If the file can't be read.
    """
    location = Path(path)
    log.debug("Reading config from %s", location)
    try:
        text = location.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise ConfigError("config", str(location), "is not UTF-8 text") from None
    return spec_from_settings(read_settings(text))


### config.py ends here

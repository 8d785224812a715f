"""The exceptions raised by the library."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from typing import Any


##############################################################################
class AntClusteringError(Exception):
    """Base class for all errors raised by the library."""


##############################################################################
class ConfigError(AntClusteringError):
    """A configuration value failed validation."""

    def __init__(self, key: str, value: Any, message: str) -> None:
        """Initialise the error.

        Args:
            key: The name of the offending configuration key.
            value: The offending value.
            message: What is wrong with it.
        """
        self.key = key
        """The name of the configuration key at fault."""
        self.value = value
        """The value that was rejected."""
        super().__init__(f"{key} = {value!r}: {message}")


##############################################################################
class OccupancyError(AntClusteringError):
    """An object was placed on an occupied cell, or removed from an empty one."""

    def __init__(self, coord: tuple[int, int], message: str) -> None:
        """Initialise the error.

        Args:
            coord: The cell the bad operation was applied to.
            message: The description of the violation.
        """
        self.coord = coord
        """The cell at fault."""
        super().__init__(f"cell {coord}: {message}")


##############################################################################
class ConservationError(AntClusteringError):
    """The per-type object totals drifted during a run."""


##############################################################################
class SnapshotError(AntClusteringError):
    """A snapshot file could not be parsed."""


### errors.py ends here

"""Shared fixtures and helpers for the tests."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from pathlib import Path
from typing import Iterable, Sequence

##############################################################################
# NumPy imports.
import numpy as np
import numpy.typing as npt

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from ant_clustering.grid_world import Coord, GridWorld

##############################################################################
CONFIGS = Path(__file__).parent.parent / "configs"
"""The config files shipped with the repository."""


##############################################################################
class ScriptedRandom:
    """A random source that replays a recorded sequence of draws."""

    def __init__(self, recorded: Iterable[float]) -> None:
        self._recorded = list(recorded)
        self.consumed = 0

    def draw(self) -> float:
        if self.consumed >= len(self._recorded):
            raise AssertionError(f"Ran out of recorded draws after {self.consumed}")
        value = self._recorded[self.consumed]
        self.consumed += 1
        return value

    def draws(self, count: int) -> list[float]:
        return [self.draw() for _ in range(count)]

    @property
    def exhausted(self) -> bool:
        return self.consumed == len(self._recorded)


def cell_draw(index: int, cells: int) -> float:
    """The draw that picks the given flat cell index out of `cells`."""
    return (index + 0.5) / cells


def grid_from_array(cells: npt.ArrayLike) -> GridWorld:
    """Build a world from an array of -1 (empty) or object types."""
    values = np.asarray(cells)
    grid = GridWorld(*values.shape)
    for row, col in zip(*np.nonzero(values >= 0)):
        grid.place_object(Coord(int(row), int(col)), int(values[row, col]))
    return grid


def grid_from_rows(rows: Sequence[str]) -> GridWorld:
    """Build a world from snapshot-style rows."""
    return GridWorld.from_text("\n".join(rows) + "\n")


@pytest.fixture
def full_config_path() -> Path:
    return CONFIGS / "full.conf"


@pytest.fixture
def small_config_path() -> Path:
    return CONFIGS / "small.conf"


### conftest.py ends here

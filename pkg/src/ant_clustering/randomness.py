"""The single deterministic random stream that drives a simulation run.

Every stochastic choice a run makes (placement, pick and drop decisions,
crossover cut points, mutations and random-walk steps) is derived from a
uniform real in [0, 1) taken from one stream, in a documented order. That
makes a run fully determined by its configuration and seed, and lets tests
replace the stream with a recorded sequence of draws.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from typing import Sequence

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Typing extension imports.
from typing_extensions import Final, Protocol


##############################################################################
class RandomSource(Protocol):
    """The interface the engine and movement code draw randomness through."""

    def draw(self) -> float:
        """Take the next uniform real in [0, 1) from the stream."""

    def draws(self, count: int) -> Sequence[float]:
        """Take the next `count` uniform reals in [0, 1) from the stream."""


##############################################################################
class UniformStream:
    """A seeded stream of uniform reals backed by NumPy's PCG64 generator.

    Values are pulled from the generator in blocks and handed out in order,
    so the sequence seen by the caller does not depend on how it asks for
    them.
    """

    BLOCK: Final[int] = 4096
    """How many values to pull from the generator at a time."""

    def __init__(self, seed: int) -> None:
        """Initialise the stream.

        Args:
            seed: The seed for the underlying generator.
        """
        self._seed = seed
        """The seed the stream was created with."""
        self._generator = np.random.default_rng(seed)
        """The underlying NumPy generator."""
        self._buffer: list[float] = []
        """Values pulled from the generator but not yet handed out."""
        self._position = 0
        """The index of the next value to hand out from the buffer."""
        self.consumed = 0
        """The total number of values handed out so far."""

    @property
    def seed(self) -> int:
        """The seed the stream was created with."""
        return self._seed

    def _refill(self) -> None:
        """Pull the next block of values from the generator."""
        self._buffer = self._generator.random(self.BLOCK).tolist()
        self._position = 0

    def draw(self) -> float:
        """Take the next uniform real in [0, 1) from the stream.

        Returns:
            The value.
        """
        if self._position >= len(self._buffer):
            self._refill()
        value = self._buffer[self._position]
        self._position += 1
        self.consumed += 1
        return value

    def draws(self, count: int) -> list[float]:
        """Take the next `count` uniform reals in [0, 1) from the stream.

        Args:
            count: The number of values to take.

        Returns:
            The values, in stream order.
        """
        taken: list[float] = []
        while len(taken) < count:
            if self._position >= len(self._buffer):
                self._refill()
            wanted = min(count - len(taken), len(self._buffer) - self._position)
            taken.extend(self._buffer[self._position : self._position + wanted])
            self._position += wanted
        self.consumed += count
        return taken


##############################################################################
def scaled_index(draw: float, size: int) -> int:
    """Turn a uniform draw into an index in [0, size).

    Args:
        draw: A uniform real in [0, 1).
        size: The number of choices.

    Returns:
        The chosen index.
    """
    return min(int(draw * size), size - 1)


### randomness.py ends here

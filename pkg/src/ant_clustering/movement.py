"""Ant movement: the one-step random walk and the genetic-operator jump.

The random walk moves an ant to one of the cells next to it. The genetic
move writes the ant's row and column as fixed-width bitstrings, treats the
two as parents for a single-point crossover, mutates the children bit by bit
and reads them back as the new row and column. Jumps of any length are
possible that way, which is what lets the hybrid variant roam the whole
world.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
import math
from enum import Enum
from typing import NamedTuple, Optional, Sequence

##############################################################################
# Local imports.
from .errors import ConfigError
from .grid_world import VON_NEUMANN_OFFSETS, Coord, square_offsets, wrap
from .randomness import RandomSource, scaled_index


##############################################################################
class BaselineNeighborhood(str, Enum):
    """The set of cells a random-walking ant may step to."""

    MOORE = "moore"
    """The eight surrounding cells."""

    VON_NEUMANN = "von_neumann"
    """The four orthogonally adjacent cells."""

    @property
    def offsets(self) -> tuple[tuple[int, int], ...]:
        """The steps available, in row-major order."""
        if self is BaselineNeighborhood.MOORE:
            return square_offsets(3)
        return VON_NEUMANN_OFFSETS


##############################################################################
class Genome(NamedTuple):
    """The binary encoding of an ant's location."""

    row_bits: str
    """The row, as a big-endian bitstring."""

    col_bits: str
    """The column, as a big-endian bitstring."""

    @property
    def width(self) -> int:
        """The number of bits per coordinate."""
        return len(self.row_bits)


##############################################################################
class GaParams(NamedTuple):
    """The settings of the genetic move."""

    mutation_rate: float
    """The probability of flipping each bit."""

    crossover: bool = True
    """Should the row and column be recombined before mutating?"""


##############################################################################
def genome_width(dims: tuple[int, int]) -> int:
    """Get the number of bits needed per coordinate for a grid.

    Args:
        dims: The (height, width) of the grid.

    Returns:
        `ceil(log2(max(dims)))`, but never less than one bit.
    """
    return max(1, math.ceil(math.log2(max(dims))))


def default_mutation_rate(dims: tuple[int, int]) -> float:
    """The default per-bit mutation rate for a grid: one flip per coordinate.

    Args:
        dims: The (height, width) of the grid.

    Returns:
        `1 / B`.
    """
    return 1 / genome_width(dims)


def _check_width(cell: Coord, width: int) -> None:
    """Refuse a genome width too narrow for a location."""
    if max(cell) >= 1 << width:
        raise ConfigError("genome_width", width, f"too narrow to encode {tuple(cell)}")


##############################################################################
def encode(cell: Coord, width: int) -> Genome:
    """Write a location as a genome.

    Args:
        cell: The location to encode.
        width: The number of bits per coordinate.

    Returns:
        The genome, each coordinate zero-padded to `width` bits.

    Raises:
        ConfigError: If `width` bits can't hold the coordinates.
    """
    _check_width(cell, width)
    return Genome(format(cell.row, f"0{width}b"), format(cell.col, f"0{width}b"))


def recombine(genome: Genome, cut: int) -> Genome:
    """Single-point crossover with the row and column bits as the parents.

    Args:
        genome: The genome to recombine.
        cut: The crossover point, in [1, B - 1].

    Returns:
        The two children, as the new row and column bits.
    """
    row, col = genome
    return Genome(row[:cut] + col[cut:], col[:cut] + row[cut:])


def _flip(bits: str, draws: Sequence[float], rate: float) -> str:
    """Flip each bit whose draw falls under the rate."""
    return "".join(
        ("1" if bit == "0" else "0") if draw < rate else bit
        for bit, draw in zip(bits, draws)
    )


def mutate(genome: Genome, draws: Sequence[float], rate: float) -> Genome:
    """Flip bits of a genome independently.

    Args:
        genome: The genome to mutate.
        draws: `2B` uniform reals; row bits first, then column bits, each in
            ascending bit index.
        rate: The per-bit flip probability.

    Returns:
        The mutated genome.
    """
    width = genome.width
    return Genome(
        _flip(genome.row_bits, draws[:width], rate),
        _flip(genome.col_bits, draws[width : 2 * width], rate),
    )


def decode(genome: Genome, dims: tuple[int, int]) -> Coord:
    """Read a genome back as a location on a grid.

    Args:
        genome: The genome to decode.
        dims: The (height, width) of the grid.

    Returns:
        The location, reduced onto the grid so it's always in bounds.
    """
    return wrap(int(genome.row_bits, 2), int(genome.col_bits, 2), dims)


def _crossed(row: int, col: int, cut: int, width: int) -> tuple[int, int]:
    """`recombine`, on the coordinates as integers."""
    low = (1 << (width - cut)) - 1
    return (row & ~low) | (col & low), (col & ~low) | (row & low)


def _flip_mask(draws: Sequence[float], rate: float) -> int:
    """The bits `mutate` would flip for the draws, most significant first."""
    mask = 0
    for draw in draws:
        mask = (mask << 1) | (draw < rate)
    return mask


##############################################################################
def step_random(
    cell: Coord,
    draw: float,
    dims: tuple[int, int],
    neighborhood: BaselineNeighborhood = BaselineNeighborhood.MOORE,
) -> Coord:
    """Take one random-walk step.

    Args:
        cell: Where the ant is.
        draw: One uniform real from the run's stream.
        dims: The (height, width) of the grid.
        neighborhood: The steps available.

    Returns:
        The neighbouring cell the ant moves to.
    """
    offsets = neighborhood.offsets
    row, col = offsets[scaled_index(draw, len(offsets))]
    return wrap(cell.row + row, cell.col + col, dims)


def step_ga(
    cell: Coord,
    params: GaParams,
    rng: RandomSource,
    dims: tuple[int, int],
    width: Optional[int] = None,
) -> Coord:
    """Take one genetic-operator jump.

    The draws are taken in a fixed order: one for the crossover cut (only
    when crossover is on), then `2B` for the mutation.
    The coordinates are worked on as integers, landing where `encode`,
    `recombine`, `mutate` and `decode` would take them on the same draws.

    Args:
        cell: Where the ant is.
        params: The settings of the move.
        rng: The run's random stream.
        dims: The (height, width) of the grid.
        width: The genome width; worked out from `dims` if not given.

    Returns:
        The cell the ant jumps to.
    """
    width = genome_width(dims) if width is None else width
    _check_width(cell, width)
    row, col = cell
    if params.crossover:
        cut = 1 + scaled_index(rng.draw(), max(1, width - 1))
        row, col = _crossed(row, col, cut, width)
    draws = rng.draws(2 * width)
    rate = params.mutation_rate
    return wrap(
        row ^ _flip_mask(draws[:width], rate),
        col ^ _flip_mask(draws[width:], rate),
        dims,
    )


### movement.py ends here

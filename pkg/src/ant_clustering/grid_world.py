"""The toroidal grid world that ants and objects live in.

The world is a `height` by `width` lattice whose opposite edges are joined,
so every cell has a full neighborhood. Each cell holds at most one object;
ants are not tracked here and never block a cell.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from functools import lru_cache
from typing import NamedTuple, Optional

##############################################################################
# NumPy imports.
import numpy as np
import numpy.typing as npt

##############################################################################
# Typing extension imports.
from typing_extensions import Final, TypeAlias

##############################################################################
# Local imports.
from .errors import OccupancyError, SnapshotError

##############################################################################
ObjectType: TypeAlias = int
"""The type of an object, an index in [0, L)."""

EMPTY: Final[int] = -1
"""The cell value used for a cell with no object in it."""

TYPE_GLYPHS: Final[str] = "RB23456789"
"""The snapshot character for each object type, by type index."""

EMPTY_GLYPH: Final[str] = "."
"""The snapshot character for an empty cell."""

MAX_TYPES: Final[int] = len(TYPE_GLYPHS)
"""The largest number of object types a world can hold."""


##############################################################################
class Coord(NamedTuple):
    """The location of a cell in the grid."""

    row: int
    """The row of the cell."""

    col: int
    """The column of the cell."""


##############################################################################
def wrap(raw_row: int, raw_col: int, dims: tuple[int, int]) -> Coord:
    """Wrap any pair of integers onto the torus.

    Args:
        raw_row: The row, which may be negative or past the edge.
        raw_col: The column, which may be negative or past the edge.
        dims: The (height, width) of the grid.

    Returns:
        The in-bounds cell the raw location corresponds to.
    """
    height, width = dims
    # Python's modulo is already non-negative for a positive divisor.
    return Coord(raw_row % height, raw_col % width)


##############################################################################
@lru_cache(maxsize=None)
def square_offsets(side: int) -> tuple[tuple[int, int], ...]:
    """Get the offsets of an s×s square, less its centre, in row-major order.

    Args:
        side: The side of the square; must be odd and at least 3.

    Returns:
        The (row, column) offsets from the centre.

    Raises:
        ValueError: If the side isn't an odd integer of at least 3.
    """
    if side < 3 or side % 2 == 0:
        raise ValueError(f"Neighborhood side must be odd and >= 3, got {side}")
    reach = side // 2
    return tuple(
        (row, col)
        for row in range(-reach, reach + 1)
        for col in range(-reach, reach + 1)
        if (row, col) != (0, 0)
    )


VON_NEUMANN_OFFSETS: Final[tuple[tuple[int, int], ...]] = (
    (-1, 0),
    (0, -1),
    (0, 1),
    (1, 0),
)
"""The four orthogonal steps, in row-major order."""


##############################################################################
class GridWorld:
    """A toroidal lattice holding at most one typed object per cell."""

    def __init__(self, height: int, width: int) -> None:
        """Initialise an empty world.

        Args:
            height: The number of rows (Y).
            width: The number of columns (Z).

        Raises:
            ValueError: If either dimension isn't positive.
        """
        if height < 1 or width < 1:
            raise ValueError(f"Grid dimensions must be positive, got {height}x{width}")
        self.height = height
        """The number of rows in the world."""
        self.width = width
        """The number of columns in the world."""
        self._cells: npt.NDArray[np.int8] = np.full((height, width), EMPTY, np.int8)
        """The occupancy of every cell; `EMPTY` or an object type."""
        self._flat = self._cells.reshape(-1)
        """A flat view onto the cells, sharing memory with them."""
        self._values = memoryview(self._flat)
        """The flat cells again, read as plain Python integers."""
        self._neighbour_index: dict[int, npt.NDArray[np.intp]] = {}
        """Flat neighbour indices for every cell, keyed by neighborhood side."""
        self._neighbour_rows: dict[int, list[list[int]]] = {}
        """The same neighbour indices as Python lists, keyed by neighborhood side."""

    @property
    def dims(self) -> tuple[int, int]:
        """The (height, width) of the world."""
        return (self.height, self.width)

    @property
    def cells(self) -> npt.NDArray[np.int8]:
        """A read-only view of the occupancy array."""
        view = self._cells.view()
        view.flags.writeable = False
        return view

    def wrap(self, raw_row: int, raw_col: int) -> Coord:
        """Wrap a raw location onto this world.

        Args:
            raw_row: The row, which may be out of range.
            raw_col: The column, which may be out of range.

        Returns:
            The in-bounds cell.
        """
        return wrap(raw_row, raw_col, self.dims)

    def _check_side(self, side: int) -> None:
        """Check that a neighborhood side is usable on this world.

        Args:
            side: The side of the neighborhood square.

        Raises:
            ValueError: If the side is even, too small or too large.
        """
        square_offsets(side)
        if side > min(self.height, self.width):
            raise ValueError(
                f"Neighborhood side {side} exceeds the {self.height}x{self.width} grid"
            )

    def neighborhood(self, center: Coord, side: int) -> list[Coord]:
        """Get the cells of the s×s square around a cell, less the cell itself.

        Args:
            center: The cell at the centre of the square.
            side: The side of the square (odd, at least 3).

        Returns:
            The `side² - 1` neighbouring cells, in row-major offset order.

        Raises:
            ValueError: If the side is even, too small or larger than the grid.
        """
        self._check_side(side)
        return [
            wrap(center.row + row, center.col + col, self.dims)
            for row, col in square_offsets(side)
        ]

    def _neighbours_of(self, center: Coord, side: int) -> npt.NDArray[np.intp]:
        """Get the flat indices of the neighbourhood of a cell.

        Args:
            center: The cell at the centre of the square.
            side: The side of the square.

        Returns:
            The flat cell indices, in the same order as `neighborhood`.
        """
        try:
            table = self._neighbour_index[side]
        except KeyError:
            self._check_side(side)
            offsets = np.array(square_offsets(side), dtype=np.intp)
            rows, cols = np.divmod(np.arange(self.height * self.width), self.width)
            table = ((rows[:, None] + offsets[:, 0]) % self.height) * self.width + (
                (cols[:, None] + offsets[:, 1]) % self.width
            )
            self._neighbour_index[side] = table
        return table[center.row * self.width + center.col]

    def neighborhood_view(
        self, center: Coord, side: int, object_type: ObjectType
    ) -> list[int]:
        """Get the presence indicators of one object type around a cell.

        Args:
            center: The cell at the centre of the square.
            side: The side of the square.
            object_type: The type of object to look for.

        Returns:
            One indicator per neighbour, 1 when it holds an object of the type.
        """
        return (self._flat[self._neighbours_of(center, side)] == object_type).astype(
            int
        ).tolist()

    def count_around(self, center: Coord, side: int, object_type: ObjectType) -> int:
        """Count the objects of one type in the neighbourhood of a cell.

        Args:
            center: The cell at the centre of the square.
            side: The side of the square.
            object_type: The type of object to count.

        Returns:
            The number of neighbouring cells holding an object of the type.
        """
        try:
            rows = self._neighbour_rows[side]
        except KeyError:
            self._neighbours_of(center, side)
            rows = self._neighbour_rows[side] = self._neighbour_index[side].tolist()
        values = self._values
        return sum(
            values[index] == object_type
            for index in rows[center.row * self.width + center.col]
        )

    def object_at(self, cell: Coord) -> Optional[ObjectType]:
        """Get the object in a cell.

        Args:
            cell: The cell to look in.

        Returns:
            The type of the object in the cell, or `None` if it's empty.
        """
        value = self._values[cell.row * self.width + cell.col]
        return None if value == EMPTY else value

    def is_empty(self, cell: Coord) -> bool:
        """Is the given cell free of objects?

        Args:
            cell: The cell to test.

        Returns:
            `True` if there is no object in the cell, `False` if there is.
        """
        return self._values[cell.row * self.width + cell.col] == EMPTY

    def place_object(self, cell: Coord, object_type: ObjectType) -> None:
        """Put an object into an empty cell.

        Args:
            cell: The cell to place the object in.
            object_type: The type of the object.

        Raises:
            OccupancyError: If the cell already holds an object.
        """
        if not self.is_empty(cell):
            raise OccupancyError(
                cell, f"already holds an object of type {self.object_at(cell)}"
            )
        self._values[cell.row * self.width + cell.col] = object_type

    def remove_object(self, cell: Coord) -> ObjectType:
        """Take the object out of a cell.

        Args:
            cell: The cell to remove the object from.

        Returns:
            The type of the object that was removed.

        Raises:
            OccupancyError: If the cell is empty.
        """
        removed = self.object_at(cell)
        if removed is None:
            raise OccupancyError(cell, "holds no object to remove")
        self._values[cell.row * self.width + cell.col] = EMPTY
        return removed

    def counts_by_type(self, type_count: int) -> list[int]:
        """Count the objects of each type on the grid.

        Args:
            type_count: The number of object types (L).

        Returns:
            The count for each type, indexed by type.
        """
        present = self._flat[self._flat != EMPTY]
        return np.bincount(present, minlength=type_count).tolist()

    def coords_of(self, object_type: ObjectType) -> list[Coord]:
        """Get every cell holding an object of the given type.

        Args:
            object_type: The type to look for.

        Returns:
            The cells, in row-major order.
        """
        return [
            Coord(int(row), int(col))
            for row, col in zip(*np.nonzero(self._cells == object_type))
        ]

    def nearest_empty(self, center: Coord) -> Coord:
        """Find the empty cell closest to a cell.

        Distance is the Chebyshev distance on the torus; ties go to the cell
        that comes first in a row-major scan of the grid.

        Args:
            center: The cell to search from.

        Returns:
            The nearest empty cell, which is `center` itself if it's empty.

        Raises:
            OccupancyError: If the grid has no empty cell at all.
        """
        if not np.any(self._cells == EMPTY):
            raise OccupancyError(center, "no empty cell left on the grid")
        row_gap = np.abs(np.arange(self.height) - center.row)
        row_gap = np.minimum(row_gap, self.height - row_gap)
        col_gap = np.abs(np.arange(self.width) - center.col)
        col_gap = np.minimum(col_gap, self.width - col_gap)
        distance = np.maximum(row_gap[:, None], col_gap[None, :])
        distance = np.where(self._cells == EMPTY, distance, np.iinfo(np.intp).max)
        row, col = divmod(int(np.argmin(distance)), self.width)
        return Coord(row, col)

    def to_text(self) -> str:
        """Render the world in the plain-text snapshot format.

        Returns:
            One line per row, one character per cell, with a trailing newline.
        """
        glyphs = np.array([EMPTY_GLYPH, *TYPE_GLYPHS])
        return "".join(
            "".join(line) + "\n" for line in glyphs[self._cells.astype(np.intp) + 1]
        )

    @classmethod
    def from_text(cls, text: str) -> GridWorld:
        """Rebuild a world from the plain-text snapshot format.

        Args:
            text: The snapshot text.

        Returns:
            The world the text describes.

        Raises:
            SnapshotError: If the text isn't a well-formed snapshot.
        """
        lines = text.splitlines()
        if not lines or not lines[0]:
            raise SnapshotError("Snapshot holds no grid rows")
        if any(len(line) != len(lines[0]) for line in lines):
            raise SnapshotError("Snapshot rows differ in length")
        world = cls(len(lines), len(lines[0]))
        for row, line in enumerate(lines):
            for col, glyph in enumerate(line):
                if glyph == EMPTY_GLYPH:
                    continue
                if glyph not in TYPE_GLYPHS:
                    raise SnapshotError(
                        f"Unknown cell glyph {glyph!r} at ({row}, {col})"
                    )
                world.place_object(Coord(row, col), TYPE_GLYPHS.index(glyph))
        return world


### grid_world.py ends here

"""A terminal application for browsing the snapshots of an experiment."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from pathlib import Path
from typing import Sequence

##############################################################################
# Rich imports.
from rich.style import Style
from rich.text import Text

##############################################################################
# Textual imports.
from textual import on
from textual.app import App, ComposeResult
from textual.binding import Binding
from textual.containers import Horizontal, VerticalScroll
from textual.widgets import Footer, Static

##############################################################################
# Typing extension imports.
from typing_extensions import Final

##############################################################################
# Local imports.
from ..errors import SnapshotError
from ..grid_world import TYPE_GLYPHS, Coord, GridWorld
from ..harness import AntMark, load_snapshot
from .snapshot_list import SnapshotList

##############################################################################
OBJECT_STYLES: Final[tuple[Style, ...]] = (
    Style(color="red", bold=True),
    Style(color="blue", bold=True),
    *(Style(color="green") for _ in TYPE_GLYPHS[2:]),
)
"""The style for each object type, by type."""

EMPTY_CELL: Final[tuple[str, Style]] = ("·", Style(dim=True))
"""How an empty cell is shown."""


##############################################################################
def render_snapshot(grid: GridWorld, ants: Sequence[AntMark] = ()) -> Text:
    """Render a snapshot as styled text.

    Objects show as coloured dots, ants as `*` (or `@` when loaded) drawn
    over whatever is in their cell.

    Args:
        grid: The world.
        ants: The ants to draw over it.

    Returns:
        The rendering, one line per grid row.
    """
    marks: dict[Coord, str] = {}
    for ant in ants:
        if marks.get(ant.position) != "@":
            marks[ant.position] = "@" if ant.loaded else "*"
    text = Text(no_wrap=True)
    for row in range(grid.height):
        for col in range(grid.width):
            cell = Coord(row, col)
            kind = grid.object_at(cell)
            if cell in marks:
                text.append(marks[cell], Style(bold=True))
            elif kind is None:
                text.append(*EMPTY_CELL)
            else:
                glyph = "●" if kind < 2 else TYPE_GLYPHS[kind]
                text.append(glyph, OBJECT_STYLES[kind])
        if row < grid.height - 1:
            text.append("\n")
    return text


##############################################################################
class SnapshotViewer(App[None]):
    """Browse the snapshots written under a results directory."""

    CSS = """
    SnapshotList {
        width: 40;
        height: 1fr;
    }

    #snapshot {
        width: auto;
        height: auto;
    }
    """

    BINDINGS = [Binding("q", "quit", "Quit")]
    """The bindings for the application."""

    def __init__(self, root: Path | str) -> None:
        """Initialise the viewer.

        Args:
            root: The results directory to browse.
        """
        super().__init__()
        self._root = Path(root)
        """The results directory being browsed."""

    def compose(self) -> ComposeResult:
        """Compose the layout of the viewer."""
        with Horizontal():
            yield SnapshotList(self._root)
            with VerticalScroll():
                yield Static(id="snapshot")
        yield Footer()

    def on_mount(self) -> None:
        """Show where we're looking once the DOM is ready."""
        self.title = f"Snapshots under {self._root}"
        self.query_one(SnapshotList).focus()

    @on(SnapshotList.Highlighted)
    def show_snapshot(self, event: SnapshotList.Highlighted) -> None:
        """Show the snapshot that was highlighted.

        Args:
            event: The event to handle.
        """
        display = self.query_one("#snapshot", Static)
        try:
            display.update(render_snapshot(*load_snapshot(event.location)))
        except (SnapshotError, OSError) as error:
            display.update(Text(str(error), style="bold red"))
        self.sub_title = str(event.location.relative_to(event.control.root))


### snapshot_viewer.py ends here

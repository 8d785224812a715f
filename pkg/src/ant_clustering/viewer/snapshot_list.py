"""Provides a widget listing the snapshots found under a results directory."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from pathlib import Path

##############################################################################
# Rich imports.
from rich.table import Table

##############################################################################
# Textual imports.
from textual import work
from textual.message import Message
from textual.widgets import OptionList
from textual.widgets.option_list import Option
from textual.worker import get_current_worker


##############################################################################
class SnapshotEntry(Option):
    """A snapshot entry for the `SnapshotList` class."""

    def __init__(self, location: Path, root: Path) -> None:
        """Initialise the entry.

        Args:
            location: The location of the snapshot's grid file.
            root: The results directory the list was built from.
        """
        self.location: Path = location
        """The location of the snapshot's grid file."""
        prompt = Table.grid(expand=True)
        prompt.add_column(no_wrap=True, ratio=1)
        prompt.add_column(no_wrap=True, justify="right")
        relative = location.relative_to(root)
        prompt.add_row(str(relative.parent), relative.stem.removeprefix("snapshot-"))
        super().__init__(prompt)


##############################################################################
class SnapshotList(OptionList):
    """A list of every snapshot under a results directory."""

    DEFAULT_CSS = """
    SnapshotList, SnapshotList:focus {
        border: blank;
    }
    """

    @dataclass
    class Highlighted(Message):
        """Message sent when a snapshot in the list is highlighted."""

        snapshot_list: SnapshotList
        """The snapshot list sending the message."""

        location: Path
        """The location of the highlighted snapshot."""

        @property
        def control(self) -> SnapshotList:
            """An alias for `snapshot_list`."""
            return self.snapshot_list

    def __init__(self, root: Path | str) -> None:
        """Initialise the snapshot list.

        Args:
            root: The results directory to look under.
        """
        super().__init__()
        self.root = Path(root).expanduser().absolute()
        """The results directory being listed."""

    def on_mount(self) -> None:
        """Populate the widget once the DOM is ready."""
        self._load()

    def _populate(self, entries: list[SnapshotEntry]) -> None:
        """Show the given entries.

        Args:
            entries: The entries to show.
        """
        with self.app.batch_update():
            self.clear_options()
            self.add_options(entries)
        if entries and self.highlighted is None:
            self.highlighted = 0

    @work(exclusive=True, thread=True)
    def _load(self) -> None:
        """Find the snapshots under the results directory."""
        worker = get_current_worker()
        entries: list[SnapshotEntry] = []
        for location in sorted(self.root.rglob("*.grid")):
            if worker.is_cancelled:
                return
            entries.append(SnapshotEntry(location, self.root))
        self.app.call_from_thread(self._populate, entries)

    def _on_option_list_option_highlighted(
        self, event: OptionList.OptionHighlighted
    ) -> None:
        """Handle an entry in the list being highlighted.

        Args:
            event: The event to handle.
        """
        event.stop()
        if event.option is not None:
            assert isinstance(event.option, SnapshotEntry)
            self.post_message(self.Highlighted(self, event.option.location))


### snapshot_list.py ends here

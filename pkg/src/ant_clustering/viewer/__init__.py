"""Defines the terminal browser for the snapshots an experiment writes."""

##############################################################################
# Local imports.
from ..harness import load_snapshot
from .snapshot_list import SnapshotEntry, SnapshotList
from .snapshot_viewer import SnapshotViewer, render_snapshot

##############################################################################
# Export public items.
__all__ = [
    "SnapshotEntry",
    "SnapshotList",
    "SnapshotViewer",
    "load_snapshot",
    "render_snapshot",
]

### __init__.py ends here

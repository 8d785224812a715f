"""Cluster measurement over a grid snapshot.

A cluster is a maximal group of same-type objects connected through
neighbouring cells (the eight surrounding cells by default, or the four
orthogonal ones), with the grid's edges wrapping round. Objects of different
types never join a cluster together, and a lone object is a cluster of one.
Carried objects have no place on the grid and are only counted.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from collections import Counter, deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

##############################################################################
# Local imports.
from .grid_world import (
    VON_NEUMANN_OFFSETS,
    Coord,
    GridWorld,
    ObjectType,
    square_offsets,
)

if TYPE_CHECKING:
    from .engine import Ant

Cluster = frozenset[Coord]
"""A cluster: the set of cells its objects occupy."""


##############################################################################
@dataclass(frozen=True)
class ClusterReport:
    """Cluster statistics for one moment of a run."""

    iteration: int
    """The iteration the report was taken at."""

    clusters_by_type: tuple[int, ...]
    """The number of clusters of each object type."""

    clusters_total: int
    """The number of clusters of all types."""

    largest_cluster: int
    """The size of the largest cluster, 0 if there are none."""

    size_histogram: dict[int, int]
    """The number of clusters of each size, by size."""

    carried_count: int
    """The number of objects being carried, and so not on the grid."""


##############################################################################
class UnionFind:
    """Disjoint sets over the integers [0, size), with path compression."""

    def __init__(self, size: int) -> None:
        """Initialise the sets, each element on its own.

        Args:
            size: The number of elements.
        """
        self._parents = list(range(size))
        """The parent of each element; roots are their own parent."""
        self._sizes = [1] * size
        """The size of the set under each root."""

    def find(self, element: int) -> int:
        """Find the root of the set holding an element.

        Args:
            element: The element to look up.

        Returns:
            The root element of its set.
        """
        root = element
        while root != self._parents[root]:
            root = self._parents[root]
        while element != root:
            self._parents[element], element = root, self._parents[element]
        return root

    def union(self, first: int, second: int) -> None:
        """Merge the sets holding two elements.

        Args:
            first: An element of one set.
            second: An element of the other.
        """
        first, second = self.find(first), self.find(second)
        if first == second:
            return
        if self._sizes[first] < self._sizes[second]:
            first, second = second, first
        self._parents[second] = first
        self._sizes[first] += self._sizes[second]


##############################################################################
def adjacency_offsets(connectivity: int) -> tuple[tuple[int, int], ...]:
    """Get the steps that connect two cells of a cluster.

    Args:
        connectivity: 8 for the surrounding cells, 4 for orthogonal ones.

    Returns:
        The (row, column) steps.

    Raises:
        ValueError: For any other connectivity.
    """
    if connectivity == 8:
        return square_offsets(3)
    if connectivity == 4:
        return VON_NEUMANN_OFFSETS
    raise ValueError(f"Connectivity must be 4 or 8, got {connectivity}")


def _ordered(clusters: Iterable[Iterable[Coord]]) -> list[Cluster]:
    """Put clusters into a stable order: by their first cell, row-major."""
    return sorted((frozenset(cluster) for cluster in clusters), key=min)


def label_clusters(
    grid: GridWorld, object_type: ObjectType, connectivity: int = 8
) -> list[Cluster]:
    """Partition the objects of one type into clusters, using union-find.

    Args:
        grid: The world to measure.
        object_type: The type of object to cluster.
        connectivity: 8 or 4 neighbour adjacency.

    Returns:
        The clusters, ordered by their first cell in row-major order.
    """
    offsets = adjacency_offsets(connectivity)
    cells = grid.coords_of(object_type)
    index = {cell: position for position, cell in enumerate(cells)}
    sets = UnionFind(len(cells))
    for position, cell in enumerate(cells):
        for row, col in offsets:
            other = index.get(grid.wrap(cell.row + row, cell.col + col))
            if other is not None:
                sets.union(position, other)
    groups: dict[int, list[Coord]] = {}
    for position, cell in enumerate(cells):
        groups.setdefault(sets.find(position), []).append(cell)
    return _ordered(groups.values())


def label_clusters_flood(
    grid: GridWorld, object_type: ObjectType, connectivity: int = 8
) -> list[Cluster]:
    """Partition the objects of one type into clusters, using flood fill.

    Gives the same result as `label_clusters`, by a different route.

    Args:
        grid: The world to measure.
        object_type: The type of object to cluster.
        connectivity: 8 or 4 neighbour adjacency.

    Returns:
        The clusters, ordered by their first cell in row-major order.
    """
    offsets = adjacency_offsets(connectivity)
    unvisited = set(grid.coords_of(object_type))
    clusters: list[list[Coord]] = []
    for seed in grid.coords_of(object_type):
        if seed not in unvisited:
            continue
        unvisited.discard(seed)
        cluster = [seed]
        frontier = deque([seed])
        while frontier:
            cell = frontier.popleft()
            for row, col in offsets:
                neighbour = grid.wrap(cell.row + row, cell.col + col)
                if neighbour in unvisited:
                    unvisited.discard(neighbour)
                    cluster.append(neighbour)
                    frontier.append(neighbour)
        clusters.append(cluster)
    return _ordered(clusters)


##############################################################################
def report(
    grid: GridWorld,
    ants: Iterable[Ant],
    iteration: int,
    *,
    type_count: int = 2,
    connectivity: int = 8,
    min_size: int = 1,
) -> ClusterReport:
    """Measure the clusters on the grid.

    Args:
        grid: The world to measure.
        ants: The ants, to count carried objects.
        iteration: The iteration the measurement is for.
        type_count: The number of object types (L).
        connectivity: 8 or 4 neighbour adjacency.
        min_size: Groups smaller than this aren't counted as clusters.

    Returns:
        The cluster report.
    """
    by_type: list[int] = []
    sizes: Counter[int] = Counter()
    for object_type in range(type_count):
        counted = [
            len(cluster)
            for cluster in label_clusters(grid, object_type, connectivity)
            if len(cluster) >= min_size
        ]
        by_type.append(len(counted))
        sizes.update(counted)
    return ClusterReport(
        iteration=iteration,
        clusters_by_type=tuple(by_type),
        clusters_total=sum(by_type),
        largest_cluster=max(sizes, default=0),
        size_histogram=dict(sorted(sizes.items())),
        carried_count=sum(1 for ant in ants if ant.load is not None),
    )


### metrics.py ends here

"""Tests for cluster labelling and reporting."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from typing import Callable

##############################################################################
# NumPy imports.
import numpy as np
import numpy.typing as npt

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from ant_clustering.config import SimConfig
from ant_clustering.engine import Ant, initialize, report_for
from ant_clustering.grid_world import Coord, GridWorld
from ant_clustering.metrics import (
    Cluster,
    UnionFind,
    adjacency_offsets,
    label_clusters,
    label_clusters_flood,
    report,
)
from conftest import grid_from_array, grid_from_rows

Labeller = Callable[[GridWorld, int], list[Cluster]]


##############################################################################
def _random_cells(sampler: np.random.Generator, largest: int) -> npt.NDArray[np.int64]:
    """A random grid of -1 (empty), 0 and 1, of a random size."""
    height, width = sampler.integers(1, largest + 1, 2)
    fill = sampler.uniform(0.1, 0.7)
    kinds = sampler.integers(0, 2, (height, width))
    return np.where(sampler.random((height, width)) < fill, kinds, -1)


def _closure_clusters(grid: GridWorld, kind: int, connectivity: int) -> set[Cluster]:
    """Clusters by transitive closure of the adjacency relation."""
    cells = grid.coords_of(kind)
    reach = np.eye(len(cells), dtype=bool)
    for first, cell in enumerate(cells):
        for row, col in adjacency_offsets(connectivity):
            other = grid.wrap(cell.row + row, cell.col + col)
            if other in cells:
                reach[first, cells.index(other)] = True
    for middle in range(len(cells)):
        reach |= reach[:, middle : middle + 1] & reach[middle : middle + 1, :]
    return {
        frozenset(cell for cell, linked in zip(cells, row) if linked) for row in reach
    }


##############################################################################
def test_union_find() -> None:
    sets = UnionFind(6)
    sets.union(0, 1)
    sets.union(2, 3)
    sets.union(1, 3)
    assert len({sets.find(element) for element in range(4)}) == 1
    assert sets.find(4) != sets.find(5)
    assert sets.find(0) != sets.find(4)


def test_adjacency_offsets() -> None:
    assert len(adjacency_offsets(8)) == 8
    assert len(adjacency_offsets(4)) == 4
    with pytest.raises(ValueError):
        adjacency_offsets(6)


##############################################################################
def test_empty_grid() -> None:
    assert label_clusters(GridWorld(6, 6), 0) == []


def test_single_object() -> None:
    grid = GridWorld(6, 6)
    grid.place_object(Coord(2, 3), 0)
    assert label_clusters(grid, 0) == [frozenset({Coord(2, 3)})]


def test_diagonal_wrap_joins_corners() -> None:
    grid = GridWorld(6, 7)
    grid.place_object(Coord(0, 0), 0)
    grid.place_object(Coord(5, 6), 0)
    assert label_clusters(grid, 0) == [frozenset({Coord(0, 0), Coord(5, 6)})]
    assert len(label_clusters(grid, 0, connectivity=4)) == 2


def test_clusters_are_ordered_by_first_cell() -> None:
    grid = grid_from_rows(["R...R", ".....", "..R..", ".....", "R...."])
    clusters = label_clusters(grid, 0)
    # The corners all touch across the wrapped edges.
    assert [min(cluster) for cluster in clusters] == [Coord(0, 0), Coord(2, 2)]
    assert len(clusters[0]) == 3


@pytest.mark.parametrize("labeller", [label_clusters, label_clusters_flood])
def test_types_never_merge(labeller: Labeller) -> None:
    grid = grid_from_rows(["RB...", ".....", ".....", ".....", "....."])
    assert len(labeller(grid, 0)) == 1
    assert len(labeller(grid, 1)) == 1


##############################################################################
def test_labellers_agree_on_random_grids() -> None:
    sampler = np.random.default_rng(2024)
    for _ in range(1000):
        grid = grid_from_array(_random_cells(sampler, 16))
        for kind in (0, 1):
            for connectivity in (8, 4):
                assert label_clusters(grid, kind, connectivity) == label_clusters_flood(
                    grid, kind, connectivity
                )


def test_labelling_matches_transitive_closure() -> None:
    sampler = np.random.default_rng(7)
    for _ in range(300):
        grid = grid_from_array(_random_cells(sampler, 8))
        for kind in (0, 1):
            for connectivity in (8, 4):
                assert set(label_clusters(grid, kind, connectivity)) == (
                    _closure_clusters(grid, kind, connectivity)
                )


def test_clusters_partition_the_objects() -> None:
    sampler = np.random.default_rng(11)
    for _ in range(100):
        grid = grid_from_array(_random_cells(sampler, 16))
        clusters = label_clusters(grid, 0)
        cells = [cell for cluster in clusters for cell in cluster]
        assert sorted(cells) == grid.coords_of(0)


##############################################################################
def test_count_is_translation_invariant() -> None:
    sampler = np.random.default_rng(3)
    for _ in range(100):
        cells = _random_cells(sampler, 16)
        shift = tuple(int(step) for step in sampler.integers(-20, 20, 2))
        moved = np.roll(cells, shift, axis=(0, 1))
        assert (
            report(grid_from_array(cells), [], 0).clusters_total
            == report(grid_from_array(moved), [], 0).clusters_total
        )


def test_removing_an_object_changes_count_by_bounded_amount() -> None:
    sampler = np.random.default_rng(5)
    for _ in range(300):
        grid = grid_from_array(_random_cells(sampler, 8))
        occupied = grid.coords_of(0)
        if not occupied:
            continue
        before = len(label_clusters(grid, 0))
        grid.remove_object(occupied[int(sampler.integers(len(occupied)))])
        assert -1 <= len(label_clusters(grid, 0)) - before <= 3


def test_adding_next_to_a_cluster_never_adds_a_cluster() -> None:
    sampler = np.random.default_rng(6)
    for _ in range(300):
        grid = grid_from_array(_random_cells(sampler, 8))
        occupied = grid.coords_of(0)
        if not occupied:
            continue
        before = len(label_clusters(grid, 0))
        anchor = occupied[int(sampler.integers(len(occupied)))]
        for row, col in adjacency_offsets(8):
            cell = grid.wrap(anchor.row + row, anchor.col + col)
            if grid.is_empty(cell):
                grid.place_object(cell, 0)
                assert len(label_clusters(grid, 0)) <= before
                break


##############################################################################
def test_report_of_a_block() -> None:
    grid = grid_from_rows(["......", ".RR...", ".RR...", "......", "......"])
    entry = report(grid, [], 4, type_count=1)
    assert entry.iteration == 4
    assert entry.clusters_by_type == (1,)
    assert entry.clusters_total == 1
    assert entry.largest_cluster == 4
    assert entry.size_histogram == {4: 1}
    assert entry.carried_count == 0


def test_report_of_adjacent_types() -> None:
    grid = grid_from_rows(["RB...", ".....", "....."])
    entry = report(grid, [], 0)
    assert entry.clusters_by_type == (1, 1)
    assert entry.clusters_total == 2
    assert entry.size_histogram == {1: 2}


def test_report_of_an_empty_grid() -> None:
    entry = report(GridWorld(4, 4), [], 0)
    assert entry.clusters_total == 0
    assert entry.largest_cluster == 0
    assert entry.size_histogram == {}


def test_report_counts_carried_objects() -> None:
    ants = [Ant(0, Coord(0, 0), load=1), Ant(1, Coord(0, 0)), Ant(2, Coord(1, 1), 0)]
    assert report(GridWorld(4, 4), ants, 0).carried_count == 2


def test_report_minimum_size() -> None:
    grid = grid_from_rows(["R....", ".....", "..RR.", ".....", "....B"])
    entry = report(grid, [], 0, min_size=2)
    assert entry.clusters_by_type == (1, 0)
    assert entry.size_histogram == {2: 1}


def test_report_four_adjacency() -> None:
    grid = grid_from_rows(["R....", ".R...", ".....", ".....", "....."])
    assert report(grid, [], 0).clusters_total == 1
    assert report(grid, [], 0, connectivity=4).clusters_total == 2


def test_report_histogram_accounts_for_every_object() -> None:
    sampler = np.random.default_rng(9)
    for _ in range(100):
        cells = _random_cells(sampler, 16)
        entry = report(grid_from_array(cells), [], 0)
        assert entry.clusters_total == sum(entry.clusters_by_type)
        assert sum(size * count for size, count in entry.size_histogram.items()) == (
            np.count_nonzero(cells >= 0)
        )


def test_initial_scatter_is_mostly_singletons() -> None:
    totals = []
    for seed in range(20):
        cfg = SimConfig(
            height=128,
            width=128,
            ants=500,
            objects_per_type=(100, 100),
            max_iter=0,
            seed=seed,
        )
        totals.append(report_for(initialize(cfg), cfg).clusters_total)
    assert np.mean(totals) > 150


### test_metrics.py ends here

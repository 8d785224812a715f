"""Tests for the random-walk and genetic-operator ant moves."""

##############################################################################
# Python imports.
from collections import Counter

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from ant_clustering.errors import ConfigError
from ant_clustering.grid_world import Coord
from ant_clustering.movement import (
    BaselineNeighborhood,
    GaParams,
    Genome,
    decode,
    default_mutation_rate,
    encode,
    genome_width,
    mutate,
    recombine,
    step_ga,
    step_random,
)
from ant_clustering.randomness import UniformStream, scaled_index
from conftest import ScriptedRandom


##############################################################################
@pytest.mark.parametrize(
    "dims, width",
    [
        ((128, 128), 7),
        ((100, 100), 7),
        ((5, 5), 3),
        ((129, 4), 8),
        ((1, 1), 1),
        ((2, 2), 1),
    ],
)
def test_genome_width(dims: tuple[int, int], width: int) -> None:
    assert genome_width(dims) == width


def test_default_mutation_rate() -> None:
    assert default_mutation_rate((128, 128)) == pytest.approx(1 / 7)


@pytest.mark.parametrize(
    "cell, expected",
    [
        (Coord(3, 3), Genome("0000011", "0000011")),
        (Coord(0, 0), Genome("0000000", "0000000")),
        (Coord(127, 2), Genome("1111111", "0000010")),
    ],
)
def test_encode(cell: Coord, expected: Genome) -> None:
    assert encode(cell, 7) == expected


def test_encode_too_narrow() -> None:
    with pytest.raises(ConfigError):
        encode(Coord(8, 0), 3)


def test_recombine_splices_at_cut() -> None:
    assert recombine(Genome("1111111", "0000000"), 3) == Genome("1110000", "0001111")


def test_recombine_identical_parents() -> None:
    genome = Genome("0110101", "0110101")
    for cut in range(1, 7):
        assert recombine(genome, cut) == genome


def test_recombine_last_cut_swaps_final_bit() -> None:
    assert recombine(Genome("1010101", "0101010"), 6) == Genome("1010100", "0101011")


def test_mutate_rate_zero_and_one() -> None:
    genome = Genome("0110101", "1100000")
    draws = np.random.default_rng(0).random(14).tolist()
    assert mutate(genome, draws, 0.0) == genome
    assert mutate(genome, draws, 1.0) == Genome("1001010", "0011111")


def test_mutate_draw_order() -> None:
    genome = Genome("000", "000")
    assert mutate(genome, [0.0, 0.9, 0.9, 0.9, 0.9, 0.0], 0.5) == Genome("100", "001")


def test_mutate_expected_flips() -> None:
    width = 7
    genome = Genome("0" * width, "0" * width)
    draws = np.random.default_rng(42).random((100_000, 2 * width))
    flips = [
        mutate(genome, row.tolist(), 1 / width).row_bits.count("1") for row in draws
    ]
    assert np.mean(flips) == pytest.approx(1.0, rel=0.05)


@pytest.mark.parametrize(
    "genome, dims, expected",
    [
        (Genome("0000011", "0000011"), (128, 128), Coord(3, 3)),
        (Genome("1111111", "1111111"), (100, 100), Coord(27, 27)),
        (Genome("0000000", "1100100"), (128, 128), Coord(0, 100)),
    ],
)
def test_decode(genome: Genome, dims: tuple[int, int], expected: Coord) -> None:
    assert decode(genome, dims) == expected


def test_decode_encode_identity_exhaustive() -> None:
    for row in range(128):
        for col in range(128):
            assert decode(encode(Coord(row, col), 7), (128, 128)) == (row, col)


##############################################################################
def test_step_random_first_neighbour() -> None:
    assert step_random(Coord(3, 3), 0.0, (128, 128)) == Coord(2, 2)


def test_step_random_last_neighbour() -> None:
    assert step_random(Coord(3, 3), 0.9999999, (128, 128)) == Coord(4, 4)


def test_step_random_wraps() -> None:
    assert step_random(Coord(0, 0), 0.0, (5, 5)) == Coord(4, 4)


def test_step_random_is_uniform_over_neighbours() -> None:
    stream = UniformStream(5)
    start = Coord(0, 0)
    counts = Counter(
        step_random(start, stream.draw(), (16, 16)) for _ in range(100_000)
    )
    assert len(counts) == 8
    assert start not in counts
    for cell, count in counts.items():
        assert cell.row in (15, 0, 1) and cell.col in (15, 0, 1)
        assert count / 100_000 == pytest.approx(0.125, abs=0.01)


def test_step_random_von_neumann() -> None:
    stream = UniformStream(9)
    seen = {
        step_random(
            Coord(4, 4), stream.draw(), (9, 9), BaselineNeighborhood.VON_NEUMANN
        )
        for _ in range(1000)
    }
    assert seen == {Coord(3, 4), Coord(4, 3), Coord(4, 5), Coord(5, 4)}


##############################################################################
def test_step_ga_fixed_point() -> None:
    stream = UniformStream(1)
    cell = Coord(77, 77)
    for _ in range(100):
        assert step_ga(cell, GaParams(0.0), stream, (128, 128)) == cell


def test_step_ga_draw_count() -> None:
    stream = UniformStream(2)
    step_ga(Coord(5, 9), GaParams(1 / 7), stream, (128, 128))
    assert stream.consumed == 1 + 2 * 7
    step_ga(Coord(5, 9), GaParams(1 / 7, crossover=False), stream, (128, 128))
    assert stream.consumed == 1 + 2 * 7 + 2 * 7


def test_step_ga_scripted() -> None:
    # Cut draw 0.0 gives cut 1; mutation flips only the last column bit.
    draws = [0.0] + [0.9] * 13 + [0.0]
    rng = ScriptedRandom(draws)
    # (3, 64): row 0000011, col 1000000 -> row 0000000, col 1000011 -> flip.
    assert step_ga(Coord(3, 64), GaParams(0.5), rng, (128, 128)) == Coord(0, 66)
    assert rng.exhausted


@pytest.mark.parametrize("crossover", [True, False])
@pytest.mark.parametrize("dims", [(128, 128), (100, 37), (2, 2)])
def test_step_ga_matches_the_genome_operations(
    crossover: bool, dims: tuple[int, int]
) -> None:
    width = genome_width(dims)
    params = GaParams(0.3, crossover)
    moving, replaying = UniformStream(12), UniformStream(12)
    cell = Coord(0, 0)
    for _ in range(2_000):
        genome = encode(cell, width)
        if crossover:
            cut = 1 + scaled_index(replaying.draw(), max(1, width - 1))
            genome = recombine(genome, cut)
        expected = decode(mutate(genome, replaying.draws(2 * width), 0.3), dims)
        cell = step_ga(cell, params, moving, dims)
        assert cell == expected
    assert moving.consumed == replaying.consumed


def test_step_ga_in_bounds_on_odd_grid() -> None:
    stream = UniformStream(3)
    sampler = np.random.default_rng(4)
    params = GaParams(default_mutation_rate((100, 100)))
    for row, col in sampler.integers(0, 100, (100_000, 2)).tolist():
        moved = step_ga(Coord(row, col), params, stream, (100, 100))
        assert 0 <= moved.row < 100 and 0 <= moved.col < 100


def test_step_ga_deterministic() -> None:
    params = GaParams(1 / 7)
    first = [
        step_ga(Coord(10, 20), params, UniformStream(8), (128, 128))
        for _ in range(3)
    ]
    assert len(set(first)) == 1


def test_step_ga_can_jump_far() -> None:
    stream = UniformStream(6)
    cell = Coord(64, 64)
    longest = 0
    for _ in range(200):
        moved = step_ga(cell, GaParams(1 / 7), stream, (128, 128))
        longest = max(longest, abs(moved.row - cell.row), abs(moved.col - cell.col))
        cell = moved
    assert longest > 1


### test_movement.py ends here

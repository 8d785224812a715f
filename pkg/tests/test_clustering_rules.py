"""Tests for the density measure and the pick-up and drop-off laws."""

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from ant_clustering.clustering_rules import (
    RuleParams,
    decide,
    density_from_count,
    drop_probability,
    perceived_density,
    pick_probability,
)


##############################################################################
@pytest.mark.parametrize(
    "view, expected",
    [
        ([0] * 8, 0.0),
        ([1] * 8, 1.0),
        ([1, 0, 1, 0, 0, 1, 0, 0], 0.375),
    ],
)
def test_perceived_density(view: list[int], expected: float) -> None:
    assert perceived_density(view) == expected


def test_unnormalized_density_is_a_count() -> None:
    assert perceived_density([1, 0, 1, 0, 0, 1, 0, 0], normalized=False) == 3.0
    assert density_from_count(5, 24, normalized=False) == 5.0


def test_density_matches_independent_count() -> None:
    rng = np.random.default_rng(3)
    for side in (3, 5, 7):
        for _ in range(200):
            view = rng.integers(0, 2, side * side - 1).tolist()
            ones = 0
            for value in view:
                if value == 1:
                    ones += 1
            density = perceived_density(view)
            assert 0.0 <= density <= 1.0
            assert density == ones / (side * side - 1)


@pytest.mark.parametrize(
    "density, k1, expected",
    [
        (0.0, 0.1, 1.0),
        (0.1, 0.1, 0.25),
        (0.3, 0.3, 0.25),
        (1.0, 0.1, (0.1 / 1.1) ** 2),
    ],
)
def test_pick_probability(density: float, k1: float, expected: float) -> None:
    assert pick_probability(density, k1) == pytest.approx(expected, rel=1e-12)


def test_pick_probability_worked_value() -> None:
    assert pick_probability(1.0, 0.1) == pytest.approx(0.008264, abs=1e-6)


@pytest.mark.parametrize(
    "density, k2, expected",
    [
        (0.0, 0.15, 0.0),
        (0.15, 0.15, 0.25),
        (1.0, 0.15, (1 / 1.15) ** 2),
    ],
)
def test_drop_probability(density: float, k2: float, expected: float) -> None:
    assert drop_probability(density, k2) == pytest.approx(expected, rel=1e-12)


def test_drop_probability_worked_value() -> None:
    assert drop_probability(1.0, 0.15) == pytest.approx(0.756144, abs=1e-6)


def test_extremes_are_exact() -> None:
    for k in np.random.default_rng(1).uniform(1e-3, 10.0, 100):
        assert pick_probability(0.0, float(k)) == 1.0
        assert drop_probability(0.0, float(k)) == 0.0


def test_monotonicity() -> None:
    densities = np.linspace(0.0, 1.0, 1000)
    rng = np.random.default_rng(7)
    for k1, k2 in rng.uniform(1e-3, 2.0, (100, 2)):
        picks = pick_probability(densities, k1)
        drops = drop_probability(densities, k2)
        assert np.all(np.diff(picks) < 0)
        assert np.all(np.diff(drops) > 0)
        assert np.all((picks > 0) & (picks <= 1))
        assert np.all((drops >= 0) & (drops < 1))


def test_closed_form_agreement() -> None:
    rng = np.random.default_rng(11)
    densities = rng.uniform(0.0, 1.0, 100_000)
    k1 = rng.uniform(1e-3, 5.0, 100_000)
    k2 = rng.uniform(1e-3, 5.0, 100_000)
    np.testing.assert_allclose(
        pick_probability(densities, k1),
        k1 * k1 / ((k1 + densities) * (k1 + densities)),
        rtol=1e-12,
    )
    np.testing.assert_allclose(
        drop_probability(densities, k2),
        densities * densities / ((k2 + densities) * (k2 + densities)),
        rtol=1e-12,
    )


@pytest.mark.parametrize(
    "probability, draw, expected",
    [
        (1.0, 0.0, True),
        (1.0, 0.999999, True),
        (0.0, 0.0, False),
        (0.0, 0.5, False),
        (0.25, 0.25, False),
        (0.25, 0.2499, True),
    ],
)
def test_decide(probability: float, draw: float, expected: bool) -> None:
    assert decide(probability, draw) is expected


def test_rule_params_defaults() -> None:
    assert RuleParams() == RuleParams(0.1, 0.15, 3, True)


### test_clustering_rules.py ends here

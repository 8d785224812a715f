"""The pick-up and drop-off laws that turn local density into ant decisions."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from typing import NamedTuple, Sequence

##############################################################################
# Typing extension imports.
from typing_extensions import Final

##############################################################################
DEFAULT_K1: Final[float] = 0.1
"""The default pick-up threshold constant."""

DEFAULT_K2: Final[float] = 0.15
"""The default drop-off threshold constant."""


##############################################################################
class RuleParams(NamedTuple):
    """The constants of the pick-up and drop-off laws."""

    k1: float = DEFAULT_K1
    """The pick-up threshold constant."""

    k2: float = DEFAULT_K2
    """The drop-off threshold constant."""

    side: int = 3
    """The side of the square neighborhood the density is taken over."""

    normalized: bool = True
    """Should the density be the fraction of occupied neighbours, or the count?"""


##############################################################################
def density_from_count(present: int, neighbours: int, normalized: bool = True) -> float:
    """Turn a count of same-type neighbours into a perceived density.

    Args:
        present: How many neighbouring cells hold a same-type object.
        neighbours: How many neighbouring cells there are (`s² - 1`).
        normalized: If `True` the count is divided by the number of
            neighbours, giving a fraction in [0, 1]; if `False` the raw
            count is returned.

    Returns:
        The perceived density `f`.
    """
    return present / neighbours if normalized else float(present)


def perceived_density(view: Sequence[int], normalized: bool = True) -> float:
    """Work out the perceived fraction of items around an ant.

    Only objects of the type the ant is concerned with count: the type of
    the object under it when deciding a pick-up, the type of the object it
    carries when deciding a drop.

    Args:
        view: One 0/1 indicator per neighbouring cell, 1 where a cell holds
            an object of the relevant type.
        normalized: Should the result be a fraction rather than a count?

    Returns:
        The perceived density `f`.
    """
    return density_from_count(sum(view), len(view), normalized)


def pick_probability(density: float, k1: float) -> float:
    """The probability of an unloaded ant picking up the object it stands on.

    Args:
        density: The perceived density `f`.
        k1: The pick-up threshold constant.

    Returns:
        `(k1 / (k1 + f))²`.
    """
    return (k1 / (k1 + density)) ** 2


def drop_probability(density: float, k2: float) -> float:
    """The probability of a loaded ant dropping its object where it stands.

    Args:
        density: The perceived density `f`.
        k2: The drop-off threshold constant.

    Returns:
        `(f / (k2 + f))²`.
    """
    return (density / (k2 + density)) ** 2


def decide(probability: float, draw: float) -> bool:
    """Settle a probabilistic decision with a draw from the run's stream.

    Args:
        probability: The probability of the decision firing.
        draw: A uniform real in [0, 1).

    Returns:
        `True` if the decision fires; a probability of 0 never fires.
    """
    return draw < probability


### clustering_rules.py ends here

import random
from fractions import Fraction

import pytest

from framedwall.walls import (
    CHAMBER_ZERO,
    UNCLASSIFIED,
    Chamber,
    StabilityParam,
    Wall,
    chamber_sample,
    classify_parameter,
    wall_between,
)


def classify(z0, z1):
    return classify_parameter(StabilityParam(Fraction(z0), Fraction(z1)))


def test_points_on_walls():
    for m in range(10):
        a, b = wall_between(m)
        # (zeta0, zeta1) = (b, -a) lies on a zeta0 + b zeta1 = 0
        assert classify(b, -a) == Wall(m)


def test_chamber_samples():
    for m in range(12):
        assert classify_parameter(chamber_sample(m)) == (CHAMBER_ZERO if m == 0 else Chamber(m))


def test_unclassified_regions():
    assert classify(1, 1) == UNCLASSIFIED
    assert classify(0, -1) == UNCLASSIFIED
    assert classify(-1, 1) == UNCLASSIFIED
    assert classify(1, -1) == UNCLASSIFIED
    assert classify(1, -2) == UNCLASSIFIED


def test_wall_between_normalized():
    assert wall_between(0) == (0, 1)
    assert wall_between(3) == (3, 4)
    with pytest.raises(ValueError):
        wall_between(-1)


def brute_chamber(z0, z1):
    """Count the walls strictly crossed on the segment from (1, 0) to the point."""
    crossed = 0
    on_wall = None
    m = 0
    while True:
        value = m * z0 + (m + 1) * z1
        if value == 0:
            on_wall = m
            break
        if value > 0:
            break
        crossed += 1
        m += 1
    return ("wall", on_wall) if on_wall is not None else ("chamber", crossed)


def test_random_against_wall_count():
    rng = random.Random(20261014)
    for _ in range(2000):
        z0 = Fraction(rng.randint(1, 50), rng.randint(1, 10))
        z1 = -z0 * Fraction(rng.randint(0, 999), 1000)
        kind, m = brute_chamber(z0, z1)
        expected = Wall(m) if kind == "wall" else Chamber(m)
        assert classify(z0, z1) == expected

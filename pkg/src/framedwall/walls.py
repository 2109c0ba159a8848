"""Walls and chambers in the King stability plane of the blow-up quiver.

Inside ``Omega = {zeta0 > 0}`` the walls are the lines
``W_m : m zeta0 + (m+1) zeta1 = 0`` for ``m >= 0``.  The chamber ``C_m``
(``m >= 1``) sits strictly between ``W_m`` and ``W_{m-1}``; ``C_0`` is the
separate quadrant ``zeta0, zeta1 < 0``.  Everything else is left unclassified.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class StabilityParam:
    zeta0: Fraction
    zeta1: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "zeta0", Fraction(self.zeta0))
        object.__setattr__(self, "zeta1", Fraction(self.zeta1))


class Region(enum.Enum):
    CHAMBER = "chamber"
    WALL = "wall"
    CHAMBER_ZERO = "chamber_zero"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class WallPosition:
    region: Region
    m: Optional[int] = None

    def __str__(self) -> str:
        if self.region is Region.CHAMBER:
            return f"Chamber({self.m})"
        if self.region is Region.WALL:
            return f"Wall({self.m})"
        if self.region is Region.CHAMBER_ZERO:
            return "ChamberZero"
        return "Unclassified"


def Chamber(m: int) -> WallPosition:
    return WallPosition(Region.CHAMBER, m)


def Wall(m: int) -> WallPosition:
    return WallPosition(Region.WALL, m)


CHAMBER_ZERO = WallPosition(Region.CHAMBER_ZERO)
UNCLASSIFIED = WallPosition(Region.UNCLASSIFIED)


def wall_between(m: int) -> tuple[int, int]:
    """Coefficients ``(a, b)`` of the wall ``a zeta0 + b zeta1 = 0``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    g = math.gcd(m, m + 1)
    return m // g, (m + 1) // g


def classify_parameter(z: StabilityParam) -> WallPosition:
    z0, z1 = z.zeta0, z.zeta1
    if z0 < 0 and z1 < 0:
        return CHAMBER_ZERO
    if z0 <= 0 or z1 > 0:
        return UNCLASSIFIED
    # zeta0 > 0, zeta1 <= 0.  The walls accumulate at zeta1 = -zeta0.
    if z0 + z1 <= 0:
        return UNCLASSIFIED
    # s = -zeta1 / (zeta0 + zeta1) is increasing along the ray and equals m on W_m.
    s = -z1 / (z0 + z1)
    if s.denominator == 1:
        return Wall(s.numerator)
    return Chamber(math.floor(s) + 1)


def chamber_sample(m: int) -> StabilityParam:
    """Deterministic interior point of ``C_m``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return StabilityParam(Fraction(-1), Fraction(-1))
    upper = Fraction(-(m - 1), m)      # zeta1 on W_{m-1} at zeta0 = 1
    lower = Fraction(-m, m + 1)        # zeta1 on W_m
    return StabilityParam(Fraction(1), (upper + lower) / 2)

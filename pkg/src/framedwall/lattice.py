"""Chern characters on the blown-up plane and their quiver dimension vectors.

A class is stored as ``(r, k, ch2)`` meaning ``ch = (r, -k C, ch2)``, where
``C`` is the exceptional curve.  The intersection lattice is fixed:
``H^2 = 1``, ``H.C = 0``, ``C^2 = -1`` and ``c1(X) = 3H - C``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

HALF = Fraction(1, 2)


class NotRepresentableError(ValueError):
    """The class has no dimension vector with non-negative entries."""


@dataclass(frozen=True)
class ChernCharacter:
    r: int
    k: int
    ch2: Fraction

    def __post_init__(self) -> None:
        ch2 = Fraction(self.ch2)
        object.__setattr__(self, "ch2", ch2)
        if (2 * ch2).denominator != 1:
            raise ValueError(f"ch2 must be a half-integer, got {ch2}")
        if (Fraction(self.k, 2) - ch2).denominator != 1:
            raise ValueError(
                f"k/2 - ch2 must be an integer (k={self.k}, ch2={ch2})"
            )

    @classmethod
    def from_twice_ch2(cls, r: int, k: int, ch2x2: int) -> "ChernCharacter":
        return cls(r, k, Fraction(ch2x2, 2))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.r + other.r, self.k + other.k, self.ch2 + other.ch2)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.r, -self.k, -self.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return self + (-other)

    def __rmul__(self, n: int) -> "ChernCharacter":
        if not isinstance(n, int):
            return NotImplemented
        return ChernCharacter(n * self.r, n * self.k, n * self.ch2)

    def __str__(self) -> str:
        return f"({self.r}, {self.k}, {self.ch2})"


@dataclass(frozen=True)
class DimensionVector:
    d0: int
    d1: int
    dinf: int

    def __post_init__(self) -> None:
        if min(self.d0, self.d1, self.dinf) < 0:
            raise NotRepresentableError(
                f"dimension vector ({self.d0}, {self.d1}, {self.dinf}) has a negative entry"
            )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.d0, self.d1, self.dinf)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"expected an integer, got {x}")
    return x.numerator


def dim_vector_entries(v: ChernCharacter) -> tuple[int, int, int]:
    """Raw ``(d0, d1, dinf)``; entries may be negative."""
    d0 = _as_int(Fraction(v.k, 2) - v.ch2)
    d1 = _as_int(Fraction(-v.k, 2) - v.ch2)
    return d0, d1, v.r


def is_representable(v: ChernCharacter) -> bool:
    return min(dim_vector_entries(v)) >= 0


def to_dim_vector(v: ChernCharacter) -> DimensionVector:
    d0, d1, dinf = dim_vector_entries(v)
    if min(d0, d1, dinf) < 0:
        raise NotRepresentableError(
            f"class {v} not representable: dimension vector would be ({d0}, {d1}, {dinf})"
        )
    return DimensionVector(d0, d1, dinf)


def from_dim_vector(d: DimensionVector) -> ChernCharacter:
    return ChernCharacter(d.dinf, d.d0 - d.d1, Fraction(-(d.d0 + d.d1), 2))


def class_cm(m: int) -> ChernCharacter:
    """Class of the destabilizing sheaf ``O_C(-m-1)`` for the wall ``W_m``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return ChernCharacter(0, -1, -(m + HALF))


def subtract_destabilizer(v: ChernCharacter, i: int, m: int) -> ChernCharacter:
    """``v - i * c_m``, i.e. ``(r, k + i, ch2 + i (m + 1/2))``."""
    return ChernCharacter(v.r, v.k + i, v.ch2 + i * (m + HALF))


def twist_by_C(v: ChernCharacter, t: int) -> ChernCharacter:
    """Multiply by ``exp(tC)``, the Chern character of ``O(tC)``."""
    return ChernCharacter(
        v.r,
        v.k - t * v.r,
        v.ch2 + t * v.k - Fraction(t * t * v.r, 2),
    )


def euler_pairing(v: ChernCharacter, w: ChernCharacter) -> int:
    """Riemann-Roch ``chi(E, F) = int ch(E)^dual ch(F) td(X)`` on the blown-up plane.

    The framing twist along the line at infinity is not included.
    """
    deg1 = Fraction(w.r * v.k - v.r * w.k, 2)   # (r_v c1(w) - r_w c1(v)) . c1(X) / 2
    deg2 = v.r * w.ch2 + w.r * v.ch2 + v.k * w.k  # -c1(v).c1(w) = k_v k_w
    return _as_int(v.r * w.r + deg1 + deg2)


def expected_dim(v: ChernCharacter) -> int:
    """Closed form ``-2 r ch2 - k^2``; defined for every class."""
    return _as_int(-2 * v.r * v.ch2 - v.k * v.k)


def moduli_dim(v: ChernCharacter) -> int:
    """``dinf (d0 + d1) - (d0 - d1)^2``.  Negative values mean the space is empty."""
    d = to_dim_vector(v)
    quiver_form = d.dinf * (d.d0 + d.d1) - (d.d0 - d.d1) ** 2
    closed_form = expected_dim(v)
    assert quiver_form == closed_form, (quiver_form, closed_form)
    return quiver_form

"""Local model of a wall: the Grassmannian flip between two Springer resolutions.

``Z = {a in Hom((W^-)^*, W^+) : rk a <= i}`` has the two resolutions
``Y^+ = Tot_{Gr(i, W^+)}(S^+ ⊗ W^-)`` and ``Y^- = Tot_{Gr(i, W^-)}(S^- ⊗ W^+)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union


class FlipKind(enum.Enum):
    ISOMORPHISM = "isomorphism"
    DIVISORIAL = "divisorial"
    FLIP = "flip"
    FLOP = "flop"


class _Unknown:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"

    def __reduce__(self):
        return (_Unknown, ())


UNKNOWN = _Unknown()
"""Marker for semiorthogonal complements that are not known in closed form."""

SodCount = Union[int, _Unknown]


@dataclass(frozen=True)
class FlipGeometry:
    i: int
    w_minus: int
    w_plus: int
    dim_y: int
    dim_z_strata: tuple[int, ...]
    exc_dim_minus: int
    exc_dim_plus: int
    canonical_weight: int
    kind: FlipKind


def _check(i: int, w_minus: int, w_plus: int) -> None:
    if i < 1:
        raise ValueError("i must be >= 1")
    if i > min(w_minus, w_plus):
        raise ValueError(f"i = {i} exceeds min(w_minus, w_plus) = {min(w_minus, w_plus)}")


def determinantal_stratum_dims(i: int, w_minus: int, w_plus: int) -> list[int]:
    """``dim Z_j = j (w_minus + w_plus - j)`` for ``0 <= j <= i``."""
    _check(i, w_minus, w_plus)
    return [j * (w_minus + w_plus - j) for j in range(i + 1)]


def geometry(i: int, w_minus: int, w_plus: int) -> FlipGeometry:
    """Dimensions, canonical weight and type of the flip for ``rk <= i``.

    ``exc_dim_plus`` is the dimension of ``(phi^+)^{-1}(Z_{i-1})``,
    ``dim Y - (w_minus + 1 - i)``; symmetrically for the minus side.  When the
    fiber ``Gr(1, W/V_a)`` over ``Z_{i-1}`` is a point (``i = w``) that side
    is an isomorphism and the number is not an exceptional locus.
    """
    _check(i, w_minus, w_plus)
    dim_y = i * (w_plus + w_minus - i)
    exc_plus = dim_y - (w_minus + 1 - i)
    exc_minus = dim_y - (w_plus + 1 - i)
    if w_plus == w_minus:
        kind = FlipKind.FLOP
    elif i == min(w_minus, w_plus):
        kind = FlipKind.DIVISORIAL
    else:
        kind = FlipKind.FLIP
    return FlipGeometry(
        i=i,
        w_minus=w_minus,
        w_plus=w_plus,
        dim_y=dim_y,
        dim_z_strata=tuple(determinantal_stratum_dims(i, w_minus, w_plus)),
        exc_dim_minus=exc_minus,
        exc_dim_plus=exc_plus,
        # omega_{Y^+} = det(S^+)^{w_plus - w_minus}
        canonical_weight=w_plus - w_minus,
        kind=kind,
    )


def sod_summand_count_standard(i: int, w_minus: int, w_plus: int) -> SodCount:
    """Extra copies of ``D^b(base)`` in ``D^b(Y^+)`` beyond ``D^b(Y^-)``.

    A standard flip ``P^{a-1} ~> P^{b-1}`` (``i = 1``) and a blow-up along a
    codimension ``c`` centre both contribute ``w_plus - w_minus`` summands.
    Grassmannian flips with ``i >= 2`` return ``UNKNOWN``.  The count is
    negative when ``w_minus > w_plus`` (the embedding then runs the other way).
    """
    _check(i, w_minus, w_plus)
    if w_plus == w_minus:
        return 0
    if i == 1:
        return w_plus - w_minus
    return UNKNOWN

"""Brill-Noether strata at each wall and the contraction ledger.

At the wall ``W_m`` the stratum of index ``i >= 1`` is a pair of Grassmannian
bundles ``Gr(i, W^-)`` and ``Gr(i, W^+)`` over the moduli of
``v' = v - i c_m``.  Only numerical data is produced here: ranks, dimensions,
codimensions and the resulting contraction type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .lattice import (
    ChernCharacter,
    class_cm,
    euler_pairing,
    expected_dim,
    is_representable,
    subtract_destabilizer,
    twist_by_C,
)


class Side(enum.Enum):
    MINUS = "minus"
    PLUS = "plus"


class KSign(enum.Enum):
    K_NEGATIVE = "K_negative"
    K_POSITIVE = "K_positive"


class ContractionKind(enum.Enum):
    DIVISORIAL = "divisorial"
    SMALL = "small"
    ISOMORPHISM = "isomorphism"


@dataclass(frozen=True)
class StratumReport:
    m: int
    i: int
    v: ChernCharacter
    vprime: ChernCharacter
    rk_w_minus: int
    rk_w_plus: int
    dim_base: int
    dim_g_minus: int
    dim_g_plus: int
    codim_minus: int
    codim_plus: int
    nonempty: bool

    def rk_w(self, side: Side) -> int:
        return self.rk_w_plus if side is Side.PLUS else self.rk_w_minus

    def dim_g(self, side: Side) -> int:
        return self.dim_g_plus if side is Side.PLUS else self.dim_g_minus

    def codim(self, side: Side) -> int:
        return self.codim_plus if side is Side.PLUS else self.codim_minus

    def fiber_dim(self, side: Side) -> int:
        """Dimension of the fiber ``Gr(i, W^side)``."""
        return self.i * (self.rk_w(side) - self.i)

    def contracts(self, side: Side) -> bool:
        return self.nonempty and self.fiber_dim(side) > 0


@dataclass(frozen=True)
class ContractionReport:
    m: int
    side: Side
    k_sign: KSign
    kind: ContractionKind
    per_stratum: tuple[StratumReport, ...] = field(default_factory=tuple)

    @property
    def active(self) -> bool:
        return any(s.nonempty for s in self.per_stratum)


@dataclass(frozen=True)
class NormalBundle:
    """Normal bundle ``S (x) W^other`` of the stratum ``Gr(i, W^side)``.

    ``fiber_splitting`` maps degree to multiplicity for the restriction to a
    single ``P^1`` fiber, including the trivial directions along the base; it
    is only filled for ``i = 1``.
    """

    side: Side
    sub_rank: int
    ambient_rank: int
    twist_rank: int
    rank: int
    base_dim: int
    fiber_splitting: Optional[dict[int, int]] = None

    @property
    def fiber_normal_rank(self) -> int:
        return self.rank + self.base_dim

    def __str__(self) -> str:
        return f"S({self.sub_rank} of {self.ambient_rank}) ⊗ W({self.twist_rank})"


def _require_stratum(i: int, m: int) -> None:
    if i < 1:
        raise ValueError("stratum index i must be >= 1 (i = 0 is the open stratum)")
    if m < 0:
        raise ValueError("wall index m must be non-negative")


def bn_ranks(v: ChernCharacter, m: int, i: int) -> tuple[int, int]:
    """Ranks of ``W^- = Ext^1(E', O_C(-m-1))`` and ``W^+ = Ext^1(O_C(-m-1), E')``."""
    _require_stratum(i, m)
    if v.r <= 0:
        raise ValueError("bn_ranks requires r > 0")
    r, k = v.r, v.k
    return r * m + k + i, r * (m + 1) + k + i


def bn_ranks_riemann_roch(v: ChernCharacter, m: int, i: int) -> tuple[int, int]:
    """Same ranks from the Euler pairing, assuming ``hom = ext^2 = 0``."""
    _require_stratum(i, m)
    vprime = subtract_destabilizer(v, i, m)
    c = class_cm(m)
    return -euler_pairing(vprime, c), -euler_pairing(c, vprime)


def codim_formula(v: ChernCharacter, m: int, i: int) -> tuple[int, int]:
    """``(codim G^-_i in M^m, codim G^+_i in M^{m+1})``."""
    rk_minus, rk_plus = bn_ranks(v, m, i)
    return i * rk_plus, i * rk_minus


def stratum_report(v: ChernCharacter, m: int, i: int) -> StratumReport:
    rk_minus, rk_plus = bn_ranks(v, m, i)
    vprime = subtract_destabilizer(v, i, m)
    dim_base = expected_dim(vprime)
    codim_minus, codim_plus = codim_formula(v, m, i)
    nonempty = dim_base >= 0 and is_representable(vprime) and i <= rk_minus
    return StratumReport(
        m=m,
        i=i,
        v=v,
        vprime=vprime,
        rk_w_minus=rk_minus,
        rk_w_plus=rk_plus,
        dim_base=dim_base,
        dim_g_minus=dim_base + i * (rk_minus - i),
        dim_g_plus=dim_base + i * (rk_plus - i),
        codim_minus=codim_minus,
        codim_plus=codim_plus,
        nonempty=nonempty,
    )


def normal_bundle_descriptor(v: ChernCharacter, m: int, i: int, side: Side) -> NormalBundle:
    s = stratum_report(v, m, i)
    other = Side.MINUS if side is Side.PLUS else Side.PLUS
    twist = s.rk_w(other)
    splitting = None
    if i == 1:
        # On Gr(1, W) = P(W) the tautological sub-bundle is O(-1).
        splitting = {-1: twist}
        if s.dim_base > 0:
            splitting[0] = s.dim_base
    return NormalBundle(
        side=side,
        sub_rank=i,
        ambient_rank=s.rk_w(side),
        twist_rank=twist,
        rank=i * twist,
        base_dim=max(s.dim_base, 0),
        fiber_splitting=splitting,
    )


def _stratum_indices(v: ChernCharacter, m: int) -> range:
    """All ``i >= 1`` for which ``dim_base`` can be non-negative at wall ``m``.

    ``dim_base(i) = D - c i - i^2`` with ``c = r(2m+1) + 2k`` is a downward
    parabola in ``i``; past its vertex and its first negative value it stays
    negative.
    """
    c = v.r * (2 * m + 1) + 2 * v.k
    big_d = expected_dim(v)
    i = 1
    last = 0
    while True:
        value = big_d - c * i - i * i
        if value >= 0:
            last = i
        elif 2 * i >= -c:
            break
        i += 1
    return range(1, last + 1)


def strata_at_wall(v: ChernCharacter, m: int) -> tuple[StratumReport, ...]:
    """Reports for every stratum with ``dim_base >= 0`` (the rest are empty)."""
    return tuple(stratum_report(v, m, i) for i in _stratum_indices(v, m))


def contraction_report(v: ChernCharacter, m: int, side: Side = Side.PLUS) -> ContractionReport:
    if v.r <= 0:
        raise ValueError("contraction_report requires r > 0")
    if m < 0:
        raise ValueError("m must be non-negative")
    strata = strata_at_wall(v, m)
    # rk W^+ - rk W^- = r > 0: the plus contraction is K-negative.
    k_sign = KSign.K_NEGATIVE if side is Side.PLUS else KSign.K_POSITIVE
    exceptional = [s for s in strata if s.contracts(side)]
    if not exceptional:
        kind = ContractionKind.ISOMORPHISM
    elif any(s.codim(side) == 1 for s in exceptional):
        kind = ContractionKind.DIVISORIAL
    else:
        kind = ContractionKind.SMALL
    return ContractionReport(m=m, side=side, k_sign=k_sign, kind=kind, per_stratum=strata)


def _first_empty_wall(v: ChernCharacter) -> int:
    """Least ``m`` from which on every stratum ``i >= 1`` has ``dim_base < 0``."""
    big_d = expected_dim(v)
    m = 0
    while True:
        c = v.r * (2 * m + 1) + 2 * v.k
        if c >= -1 and big_d - c - 1 < 0:
            return m
        m += 1


def wall_sweep(v: ChernCharacter, side: Side = Side.PLUS) -> tuple[int, list[ContractionReport]]:
    """``(m_stop, reports for m < m_stop)`` for an arbitrary class with ``r > 0``."""
    if v.r <= 0:
        raise ValueError("wall sweep requires r > 0")
    reports = [contraction_report(v, m, side) for m in range(_first_empty_wall(v))]
    m_stop = 0
    for rep in reports:
        if rep.active:
            m_stop = rep.m + 1
    return m_stop, reports[:m_stop]


def mmp_ledger(v: ChernCharacter) -> list[ContractionReport]:
    """Plus-side contraction reports for ``m = 0, ..., m_stop - 1``.

    Only classes ``(r, 0, ch2)`` with ``r > 0`` are accepted.
    """
    if v.r <= 0 or v.k != 0:
        raise ValueError(
            f"the contraction ledger is defined for v = (r, 0, ch2) with r > 0; got {v}"
        )
    return wall_sweep(v, Side.PLUS)[1]


def m_stop(v: ChernCharacter) -> int:
    return wall_sweep(v)[0]


def ideal_stability_index(n: int, c: int) -> tuple[int, ChernCharacter]:
    """Stability threshold of ``I_Z`` with ``length(Z) = n``, ``length(Z ∩ C) = c``.

    Returns ``c`` together with the class of the sub-object ``I_W(-C)`` in
    ``0 -> I_W(-C) -> I_Z -> O_C(-c) -> 0``.
    """
    if n < 0 or c < 0:
        raise ValueError("n and c must be non-negative")
    if c > n:
        raise ValueError(f"length of Z ∩ C ({c}) cannot exceed length of Z ({n})")
    ideal_w = ChernCharacter(1, 0, -(n - c))
    return c, twist_by_C(ideal_w, -1)

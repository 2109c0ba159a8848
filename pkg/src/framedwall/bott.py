"""Homogeneous bundles on ``G = Gr(i, n)`` and Borel-Weil-Bott.

A weight ``alpha = (beta | gamma)`` with ``beta`` of length ``i`` and ``gamma``
of length ``n - i`` (each weakly decreasing) names the bundle
``V(alpha) = K_beta(S^*) ⊗ K_gamma(Q^*)``.  Its cohomology is computed by the
usual rho-shift: sort ``alpha + rho`` and read off the number of inversions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

Weight = tuple[int, ...]


@dataclass(frozen=True)
class CohomologyResult:
    """``degree is None`` means every cohomology group vanishes."""

    degree: Optional[int]
    dimension: int = 0

    @property
    def all_vanish(self) -> bool:
        return self.degree is None

    def h(self, j: int) -> int:
        return self.dimension if self.degree == j else 0


ALL_VANISH = CohomologyResult(None, 0)


def _is_weakly_decreasing(xs: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(xs, xs[1:]))


def validate_weight(alpha: Sequence[int], i: int, n: int) -> Weight:
    alpha = tuple(int(a) for a in alpha)
    if not 0 < i < n:
        raise ValueError(f"need 0 < i < n, got i={i}, n={n}")
    if len(alpha) != n:
        raise ValueError(f"weight {alpha} must have length n={n}")
    if not (_is_weakly_decreasing(alpha[:i]) and _is_weakly_decreasing(alpha[i:])):
        raise ValueError(f"weight {alpha} is not weakly decreasing on blocks of sizes {i}, {n - i}")
    return alpha


def is_dominant_pair(alpha: Sequence[int], i: int, n: int) -> bool:
    alpha = validate_weight(alpha, i, n)
    return alpha[i - 1] >= alpha[i]


def weyl_dimension(lam: Sequence[int]) -> int:
    """Dimension of the irreducible ``GL_n`` representation with highest weight ``lam``."""
    n = len(lam)
    num = 1
    den = 1
    for a, b in combinations(range(n), 2):
        num *= lam[a] - lam[b] + b - a
        den *= b - a
    value = Fraction(num, den)
    assert value.denominator == 1
    return value.numerator


def rho(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def bwb_cohomology(alpha: Sequence[int], i: int, n: int) -> CohomologyResult:
    alpha = validate_weight(alpha, i, n)
    shifted = [a + p for a, p in zip(alpha, rho(n))]
    if len(set(shifted)) < n:
        return ALL_VANISH
    inversions = sum(1 for a, b in combinations(range(n), 2) if shifted[a] < shifted[b])
    ordered = sorted(shifted, reverse=True)
    lam = tuple(x - p for x, p in zip(ordered, rho(n)))
    return CohomologyResult(inversions, weyl_dimension(lam))


def euler_characteristic(alpha: Sequence[int], i: int, n: int) -> int:
    res = bwb_cohomology(alpha, i, n)
    return 0 if res.all_vanish else (-1) ** res.degree * res.dimension


def pieri_svee_symk(k: int, i: int) -> list[Weight]:
    """Summands of ``S^* ⊗ Sym^k S^*`` on a rank ``i`` bundle, as ``GL_i`` weights."""
    if k < 1 or i < 1:
        raise ValueError("need k >= 1 and i >= 1")
    top = (k + 1,) + (0,) * (i - 1)
    if i == 1:
        return [top]
    return [(k, 1) + (0,) * (i - 2), top]


def pieri_s_symk(k: int, i: int) -> list[Weight]:
    """Summands of ``S ⊗ Sym^k S^*`` (``S`` is the dual, weight ``(0, ..., 0, -1)``)."""
    if k < 0 or i < 1:
        raise ValueError("need k >= 0 and i >= 1")
    if i == 1:
        return [(k - 1,)]
    out = [(k,) + (0,) * (i - 2) + (-1,)]
    if k >= 1:
        out.append((k - 1,) + (0,) * (i - 1))
    return out


def _symk(k: int, i: int) -> Weight:
    return (k,) + (0,) * (i - 1)


def lemma_summands(n: int, i: int, k: int) -> tuple[list[Weight], list[Weight], list[Weight]]:
    """``V(alpha)`` decompositions of ``T_G ⊗ Sym^k S^*``, ``S ⊗ Sym^k S^*``, ``Sym^k S^*``."""
    if not 0 < i < n:
        raise ValueError(f"need 0 < i < n, got i={i}, n={n}")
    if k < 0:
        raise ValueError("k must be non-negative")
    q_block = (0,) * (n - i - 1) + (-1,)  # K_gamma(Q^*) = Q
    trivial = (0,) * (n - i)
    svee_symk = pieri_svee_symk(k, i) if k >= 1 else [(1,) + (0,) * (i - 1)]
    tangent = [nu + q_block for nu in svee_symk]  # T_G = S^* ⊗ Q
    sub = [nu + trivial for nu in pieri_s_symk(k, i)]
    sym = [_symk(k, i) + trivial]
    return tangent, sub, sym


def check_lemma_vanishing(n: int, i: int, k: int) -> tuple[bool, bool, bool]:
    """Whether ``H^1`` of each of the three bundles vanishes, summand by summand."""
    parts = lemma_summands(n, i, k)
    return tuple(
        all(bwb_cohomology(alpha, i, n).h(1) == 0 for alpha in summands)
        for summands in parts
    )

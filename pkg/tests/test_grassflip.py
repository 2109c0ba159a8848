import random

import pytest
import sympy

from framedwall.grassflip import (
    UNKNOWN,
    FlipKind,
    determinantal_stratum_dims,
    geometry,
    sod_summand_count_standard,
)


def triples(wmax=8):
    for w_minus in range(1, wmax + 1):
        for w_plus in range(w_minus, wmax + 1):
            for i in range(1, w_minus + 1):
                yield i, w_minus, w_plus


def jacobian_rank(j, a, b, rng):
    """Rank of d(U V^T) at a random rational point, U: a x j, V: b x j."""
    U = [[sympy.Rational(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(j)] for _ in range(a)]
    V = [[sympy.Rational(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(j)] for _ in range(b)]
    rows = []
    for x in range(a):
        for y in range(b):
            row = []
            for p in range(a):
                for l in range(j):
                    row.append(V[y][l] if p == x else 0)
            for q in range(b):
                for l in range(j):
                    row.append(U[x][l] if q == y else 0)
            rows.append(row)
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def test_determinantal_dims_against_jacobian():
    rng = random.Random(7)
    for a in range(1, 5):
        for b in range(a, 5):
            dims = determinantal_stratum_dims(a, a, b)
            for j in range(a + 1):
                # the parametrization is generically submersive onto Z_j
                assert dims[j] == max(jacobian_rank(j, a, b, rng) for _ in range(2))


def test_exceptional_dims_grid():
    for i, wm, wp in triples():
        g = geometry(i, wm, wp)
        assert g.exc_dim_plus == g.dim_y - (wm + 1 - i)
        assert g.exc_dim_minus == g.dim_y - (wp + 1 - i)
        # fiber over a generic point of Z_{i-1} is P(W/V) of dimension w - i
        dz = g.dim_z_strata[i - 1]
        assert g.exc_dim_plus == dz + (wp - i)
        assert g.exc_dim_minus == dz + (wm - i)


def test_classification_grid():
    for i, wm, wp in triples():
        g = geometry(i, wm, wp)
        if wm == wp:
            assert g.kind is FlipKind.FLOP
        elif i == wm:
            assert g.kind is FlipKind.DIVISORIAL
            assert g.exc_dim_plus == g.dim_y - 1
        else:
            assert g.kind is FlipKind.FLIP
            assert g.exc_dim_plus <= g.dim_y - 2 and g.exc_dim_minus <= g.dim_y - 2
        assert g.canonical_weight == wp - wm


def test_mirror_symmetry():
    for i, wm, wp in triples(6):
        g, h = geometry(i, wm, wp), geometry(i, wp, wm)
        assert (g.dim_y, g.dim_z_strata) == (h.dim_y, h.dim_z_strata)
        assert (g.exc_dim_plus, g.exc_dim_minus) == (h.exc_dim_minus, h.exc_dim_plus)
        assert g.canonical_weight == -h.canonical_weight


def test_examples():
    g = geometry(1, 2, 3)
    assert g.kind is FlipKind.FLIP and (g.exc_dim_minus, g.exc_dim_plus) == (1, 2)
    for r in range(2, 7):
        g = geometry(1, 1, r)
        assert g.kind is FlipKind.DIVISORIAL and g.exc_dim_plus == r - 1
    assert geometry(2, 2, 2).kind is FlipKind.FLOP
    assert geometry(2, 2, 2).canonical_weight == 0


def test_sod_counts():
    assert sod_summand_count_standard(1, 2, 3) == 1
    assert sod_summand_count_standard(1, 1, 2) == 1
    assert sod_summand_count_standard(1, 1, 5) == 4
    assert sod_summand_count_standard(2, 2, 2) == 0
    assert sod_summand_count_standard(2, 3, 4) is UNKNOWN
    assert repr(UNKNOWN) == "Unknown"


def test_invalid():
    with pytest.raises(ValueError):
        geometry(0, 1, 1)
    with pytest.raises(ValueError):
        geometry(3, 2, 4)

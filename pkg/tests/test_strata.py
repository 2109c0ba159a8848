from fractions import Fraction

import pytest

from framedwall.lattice import ChernCharacter, expected_dim, is_representable
from framedwall.strata import (
    ContractionKind,
    KSign,
    Side,
    bn_ranks,
    bn_ranks_riemann_roch,
    contraction_report,
    ideal_stability_index,
    m_stop,
    mmp_ledger,
    normal_bundle_descriptor,
    strata_at_wall,
    stratum_report,
    wall_sweep,
)


def v(r, k, ch2):
    return ChernCharacter(r, k, Fraction(ch2))


def grid():
    for r in range(1, 5):
        for twice in range(-20, 0):
            if twice % 2 == 0:
                yield ChernCharacter.from_twice_ch2(r, 0, twice)


def test_bn_ranks_examples():
    assert bn_ranks(v(1, 0, -3), 0, 1) == (1, 2)
    assert bn_ranks(v(1, 0, -5), 1, 2) == (3, 4)
    with pytest.raises(ValueError):
        bn_ranks(v(1, 0, -3), 0, 0)
    with pytest.raises(ValueError):
        bn_ranks(v(0, 1, Fraction(-1, 2)), 0, 1)


def test_bn_ranks_agree_with_riemann_roch():
    for w in grid():
        for m in range(7):
            for i in range(1, 7):
                assert bn_ranks(w, m, i) == bn_ranks_riemann_roch(w, m, i)


def test_balance():
    for w in grid():
        for m in range(7):
            for i in range(1, 7):
                s = stratum_report(w, m, i)
                if s.nonempty:
                    assert s.dim_g_minus + s.codim_minus == expected_dim(w)
                    assert s.dim_g_plus + s.codim_plus == expected_dim(w)


def test_strata_enumeration_is_complete():
    # brute force over a generous range of i
    for w in grid():
        for m in range(7):
            found = {s.i for s in strata_at_wall(w, m)}
            brute = {i for i in range(1, 40) if stratum_report(w, m, i).dim_base >= 0}
            assert found == brute


def test_hilb3_ledger():
    reports = mmp_ledger(v(1, 0, -3))
    assert [r.m for r in reports] == [0, 1, 2]
    w0, w1, w2 = reports
    assert w0.kind is ContractionKind.DIVISORIAL
    assert w1.kind is ContractionKind.SMALL and w2.kind is ContractionKind.SMALL
    assert all(r.k_sign is KSign.K_NEGATIVE for r in reports)
    s1, s2 = w0.per_stratum
    assert (s1.dim_base, s1.codim_plus, s1.rk_w_plus) == (4, 1, 2)
    assert (s2.dim_base, s2.codim_plus, s2.rk_w_minus, s2.rk_w_plus) == (0, 4, 2, 3)


def test_minus_side_point_fibers():
    # on the minus side of wall 0 the i = 1 fiber is Gr(1,1): an isomorphism there
    rep = contraction_report(v(1, 0, -1), 0, Side.MINUS)
    assert rep.kind is ContractionKind.ISOMORPHISM
    assert rep.k_sign is KSign.K_POSITIVE


def test_normal_bundle():
    nb = normal_bundle_descriptor(v(1, 0, -3), 0, 1, Side.PLUS)
    assert nb.fiber_splitting == {-1: 1, 0: 4}
    assert nb.rank == 1 and nb.fiber_normal_rank == 5
    nb2 = normal_bundle_descriptor(v(1, 0, -3), 0, 2, Side.PLUS)
    assert nb2.rank == 4 and nb2.fiber_splitting is None
    assert str(nb2) == "S(2 of 3) ⊗ W(2)"


def test_empty_ledgers():
    assert mmp_ledger(v(2, 0, 0)) == []
    assert m_stop(v(3, 0, 0)) == 0


def test_ledger_scope():
    with pytest.raises(ValueError):
        mmp_ledger(v(1, 1, Fraction(-5, 2)))
    with pytest.raises(ValueError):
        mmp_ledger(v(0, 0, -1))


def test_wall_sweep_with_k():
    w = v(1, 1, Fraction(-5, 2))
    stop, reports = wall_sweep(w)
    assert stop == len(reports)
    assert reports[-1].active
    for rep in contraction_report(w, stop, Side.PLUS), contraction_report(w, stop + 3, Side.PLUS):
        assert not rep.active


def test_m_stop_hilbert():
    for n in range(1, 9):
        assert m_stop(v(1, 0, -n)) == n


def test_nonempty_needs_representable_base():
    for w in grid():
        for m in range(7):
            for s in strata_at_wall(w, m):
                if s.nonempty:
                    assert is_representable(s.vprime)


def test_ideal_stability_index():
    c, sub = ideal_stability_index(3, 2)
    assert c == 2
    assert sub == v(1, 1, Fraction(-3, 2))
    with pytest.raises(ValueError):
        ideal_stability_index(2, 3)

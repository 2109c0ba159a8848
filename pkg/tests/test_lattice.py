from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from framedwall.lattice import (
    ChernCharacter,
    DimensionVector,
    NotRepresentableError,
    class_cm,
    dim_vector_entries,
    euler_pairing,
    expected_dim,
    from_dim_vector,
    is_representable,
    moduli_dim,
    subtract_destabilizer,
    to_dim_vector,
    twist_by_C,
)


def quiver_euler_form(d, e):
    """Euler form of the blow-up quiver with relation: vertices 0, 1, inf.

    Arrows 1->0 (twice), 0->1 (d), 1->inf (j), inf->0 (i); one relation 1->0.
    """
    d0, d1, dinf = d
    e0, e1, einf = e
    vertices = d0 * e0 + d1 * e1 + dinf * einf
    arrows = 2 * d1 * e0 + d0 * e1 + d1 * einf + dinf * e0
    relations = d1 * e0
    return vertices - arrows + relations


classes = st.builds(
    lambda r, k, s: ChernCharacter(r, k, Fraction(k, 2) - s),
    st.integers(0, 6),
    st.integers(-6, 6),
    st.integers(-10, 10),
)


def test_cm_dimension_vector():
    for m in range(8):
        assert to_dim_vector(class_cm(m)).as_tuple() == (m, m + 1, 0)


def test_examples():
    assert to_dim_vector(ChernCharacter(1, 0, -3)).as_tuple() == (3, 3, 1)
    assert to_dim_vector(ChernCharacter(2, 0, -1)).as_tuple() == (1, 1, 2)
    assert subtract_destabilizer(ChernCharacter(1, 0, -3), 1, 0) == ChernCharacter(1, 1, Fraction(-5, 2))
    assert moduli_dim(ChernCharacter(1, 0, -3)) == 6


def test_invalid_parity():
    with pytest.raises(ValueError):
        ChernCharacter(1, 1, -1)
    with pytest.raises(ValueError):
        ChernCharacter(1, 0, Fraction(1, 3))


def test_not_representable():
    v = ChernCharacter(1, 0, 1)
    assert not is_representable(v)
    with pytest.raises(NotRepresentableError):
        to_dim_vector(v)
    with pytest.raises(NotRepresentableError):
        DimensionVector(-1, 0, 0)


@given(st.integers(0, 20), st.integers(0, 20), st.integers(0, 20))
def test_roundtrip_from_dims(d0, d1, dinf):
    d = DimensionVector(d0, d1, dinf)
    assert to_dim_vector(from_dim_vector(d)) == d


@given(classes)
def test_roundtrip_from_class(v):
    if is_representable(v):
        assert from_dim_vector(to_dim_vector(v)) == v


@given(classes, classes)
def test_euler_pairing_matches_quiver_form(v, w):
    if is_representable(v) and is_representable(w):
        lhs = euler_pairing(v, w)
        rhs = quiver_euler_form(to_dim_vector(v).as_tuple(), to_dim_vector(w).as_tuple())
        assert lhs == rhs


@given(classes, classes, classes)
def test_euler_pairing_bilinear(u, v, w):
    assert euler_pairing(u + v, w) == euler_pairing(u, w) + euler_pairing(v, w)
    assert euler_pairing(w, u + v) == euler_pairing(w, u) + euler_pairing(w, v)


@given(classes)
def test_expected_dim_is_r2_minus_chi(v):
    assert expected_dim(v) == v.r**2 - euler_pairing(v, v)


def test_known_pairings():
    # chi(O(-C), O_C(-3)) = -3, chi(c_1, O(-2C)) = -4
    o_minus_c = twist_by_C(ChernCharacter(1, 0, 0), -1)
    o_minus_2c = twist_by_C(ChernCharacter(1, 0, 0), -2)
    o_c_minus_3 = ChernCharacter(0, -1, Fraction(-5, 2))
    assert o_minus_c == ChernCharacter(1, 1, Fraction(-1, 2))
    assert euler_pairing(o_minus_c, o_c_minus_3) == -3
    assert euler_pairing(class_cm(1), o_minus_2c) == -4


def test_cm_is_exceptional():
    # O_C(-m-1) is exceptional: Hom = C, Ext^1 = Ext^2 = 0.
    for m in range(8):
        assert euler_pairing(class_cm(m), class_cm(m)) == 1


@given(classes, st.integers(0, 8))
def test_euler_difference_is_rank(v, m):
    c = class_cm(m)
    assert euler_pairing(v, c) - euler_pairing(c, v) == v.r
    assert euler_pairing(v, c) == -(v.r * m + v.k)


@given(classes, st.integers(-4, 4))
def test_twist_preserves_dim(v, t):
    assert expected_dim(twist_by_C(v, t)) == expected_dim(v)
    assert twist_by_C(twist_by_C(v, t), -t) == v


def test_dim_identity_grid():
    for r in range(1, 5):
        for k in range(-3, 4):
            for s in range(-10, 11):
                v = ChernCharacter(r, k, Fraction(k, 2) - s)
                if is_representable(v):
                    d0, d1, dinf = dim_vector_entries(v)
                    assert dinf * (d0 + d1) - (d0 - d1) ** 2 == -2 * r * v.ch2 - k * k

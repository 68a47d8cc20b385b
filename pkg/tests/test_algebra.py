from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pg4.algebra import (
    AngleFraction,
    CycloQuat,
    FieldElem,
    HALF,
    I,
    J,
    K,
    MINUS_ONE,
    ONE,
    RepresentationError,
    SQRT2,
    SQRT5,
    SQRT10,
    angle_of,
    exp_i,
    quat,
    quat_conj,
    quat_from_json,
    quat_is_unit,
    quat_mul,
    quat_neg,
    quat_order,
    quat_real,
    quat_to_json,
)
from pg4.constants import I_I, I_O, OMEGA

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)
field_elems = st.builds(FieldElem, rationals, rationals, rationals, rationals)


def test_defining_relations():
    assert SQRT2 * SQRT2 == FieldElem(2)
    assert SQRT5 * SQRT5 == FieldElem(5)
    assert SQRT2 * SQRT5 == SQRT10
    golden = (FieldElem(1) + SQRT5) * Fr(1, 4)
    cogolden = (SQRT5 - 1) * Fr(1, 4)
    assert golden * cogolden == FieldElem(Fr(1, 4))


@settings(max_examples=150, deadline=None)
@given(field_elems, field_elems, field_elems)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=80, deadline=None)
@given(field_elems)
def test_field_inverse(a):
    if not a.is_zero():
        assert a * a.inverse() == FieldElem(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        FieldElem(1) / FieldElem(0)


def test_quaternion_table():
    assert quat_mul(I, J) == K
    assert quat_mul(J, K) == I
    assert quat_mul(K, I) == J
    assert quat_mul(I, I) == MINUS_ONE


def test_omega_order_three():
    assert quat_mul(quat_mul(OMEGA, OMEGA), OMEGA) == ONE
    assert quat_order(OMEGA) == 3
    assert quat_real(OMEGA) == FieldElem(Fr(-1, 2))


def test_cyclo_rules():
    c = CycloQuat(Fr(1, 3), 1)
    assert quat_mul(c, c) == CycloQuat(1, 0)  # a half-turn squared is -1
    a, b = CycloQuat(Fr(1, 5), 0), CycloQuat(Fr(1, 3), 0)
    assert quat_mul(a, b) == CycloQuat(Fr(8, 15), 0)
    assert quat_mul(CycloQuat(Fr(1, 5), 1), CycloQuat(Fr(1, 3), 0)) == \
        CycloQuat(Fr(1, 5) - Fr(1, 3), 1)


def test_conj():
    assert quat_conj(I) == quat_neg(I)
    assert quat_conj(CycloQuat(Fr(1, 4), 0)) == CycloQuat(Fr(7, 4), 0)


def test_angle_of():
    assert angle_of(MINUS_ONE).t == 1
    assert angle_of(OMEGA).t == Fr(2, 3)
    assert angle_of(I_I).t == Fr(1, 2)
    assert angle_of(exp_i(Fr(9, 5))).t == Fr(1, 5)


def test_angle_complement():
    for q in (OMEGA, I_I, I_O, exp_i(Fr(1, 7))):
        assert angle_of(q).t + angle_of(quat_neg(q)).t == 1


def test_units_and_promotion():
    assert quat_is_unit(I_I) and quat_is_unit(OMEGA) and quat_is_unit(I_O)
    # circle forms with denominator dividing 4 promote into the field
    assert isinstance(quat_mul(exp_i(Fr(1, 4)), OMEGA), type(OMEGA))
    with pytest.raises(RepresentationError):
        quat_mul(exp_i(Fr(1, 5)), OMEGA)


def test_canonical_demotion():
    # field coordinates on the i-circle come back as CycloQuat
    q = quat(HALF * SQRT2, HALF * SQRT2, 0, 0)
    assert q == exp_i(Fr(1, 4))
    q = quat(0, 0, Fr(-1), 0)
    assert q == CycloQuat(1, 1)


def test_angle_fraction_mod_two():
    a = AngleFraction(Fr(7, 4))
    assert (a + AngleFraction(Fr(1, 2))).t == Fr(1, 4)
    assert (-a).t == Fr(1, 4)


def test_json_round_trip():
    for q in (OMEGA, I_I, exp_i(Fr(3, 7)), CycloQuat(Fr(1, 6), 1)):
        assert quat_from_json(quat_to_json(q)) == q

import random
from fractions import Fraction as Fr

import numpy as np
import pytest

from pg4.algebra import CycloQuat, exp_i
from pg4.constants import MINUS_ONE, ONE, QI, QJ, two_I
from pg4.transform import (
    IDENTITY,
    Transform4,
    apply,
    compose,
    conjugate_elem,
    element_code,
    inverse,
    reflection,
    rotation,
    to_matrix,
    transform_from_json,
    transform_to_json,
)


def rand_transform(pool):
    return Transform4(random.random() < 0.5, random.choice(pool), random.choice(pool))


def test_identity_and_negation():
    assert np.allclose(to_matrix(IDENTITY), np.eye(4))
    assert np.allclose(to_matrix(rotation(ONE, MINUS_ONE)), -np.eye(4))
    assert np.allclose(apply(reflection(ONE, ONE), [1, 2, 3, 4]), [1, -2, -3, -4])


def test_canonical_sign_idempotent():
    g = rotation(QI, QJ)
    h = rotation(CycloQuat(Fr(3, 2), 0), CycloQuat(1, 1))  # (-i, -j)
    assert g == h


def test_inverse_examples():
    g = rotation(QI, QJ)
    assert compose(g, inverse(g)) == IDENTITY
    e = reflection(exp_i(Fr(1, 5)), QJ)
    assert compose(e, inverse(e)) == IDENTITY


def test_compose_matrix_oracle():
    pools = [list(two_I())[:12], [exp_i(Fr(k, 9)) for k in range(9)]
             + [CycloQuat(Fr(k, 9), 1) for k in range(4)]]
    for pool in pools:
        for _ in range(250):
            a, b = rand_transform(pool), rand_transform(pool)
            assert np.allclose(to_matrix(compose(a, b)),
                               to_matrix(b) @ to_matrix(a), atol=1e-9)
            assert np.allclose(to_matrix(inverse(a)),
                               np.linalg.inv(to_matrix(a)), atol=1e-9)


def test_associativity_exact():
    pool = list(two_I())[:10]
    for _ in range(120):
        a, b, c = (rand_transform(pool) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_orthogonality_and_determinant():
    pool = list(two_I())[:10]
    for _ in range(60):
        g = rand_transform(pool)
        M = to_matrix(g)
        assert np.allclose(M @ M.T, np.eye(4), atol=1e-12)
        assert np.isclose(np.linalg.det(M), -1.0 if g.star else 1.0, atol=1e-9)


def test_element_codes():
    assert str(element_code(IDENTITY)) == "0|0"
    assert str(element_code(rotation(ONE, MINUS_ONE))) == "0|1"
    g = rotation(exp_i(Fr(1, 4)), exp_i(Fr(3, 4)))
    assert str(element_code(g)) == "1|3/4"
    # a glide with rotation angle pi/2 in the invariant plane
    e = reflection(exp_i(Fr(3, 4)), exp_i(Fr(3, 4)))
    assert str(element_code(e)) == "*1/2"


def test_code_conjugation_invariant():
    pool = list(two_I())
    random.seed(5)
    for _ in range(200):
        g = rand_transform(pool)
        h = rotation(random.choice(pool), random.choice(pool))
        assert element_code(conjugate_elem(g, h)) == element_code(g)


def test_reversing_code_cross_check():
    # rotation angle in the invariant plane equals c*pi up to the documented
    # alpha <-> pi - alpha fold
    pools = [list(two_I())[:14], [exp_i(Fr(k, 10)) for k in range(10)]]
    for _ in range(150):
        pool = random.choice(pools)
        e = Transform4(True, random.choice(pool), random.choice(pool))
        c = element_code(e).a
        tr = to_matrix(e).trace()
        # compare cosines: arccos at the endpoints is ill-conditioned
        assert abs(tr / 2) == pytest.approx(abs(np.cos(float(c) * np.pi)), abs=1e-9)


def test_json_round_trip():
    g = reflection(exp_i(Fr(5, 7)), CycloQuat(Fr(1, 3), 1))
    assert transform_from_json(transform_to_json(g)) == g

"""Acceptance suite.

One test per criterion; the conftest hook prints a single
"ACCEPTANCE <nn> <name>: PASS/FAIL" line per criterion.  Stated time limits
are asserted; tolerances are pinned in the assertions.
"""

import random
import time
from fractions import Fraction as Fr
from math import gcd, lcm, pi

import numpy as np

from pg4.catalog import (
    TUBICAL_FAMILIES,
    TUBICAL_LEFT,
    build,
    build_unchecked,
    list_catalog,
    parse_spec,
    polyhedral_spec,
    tubical_spec,
)
from pg4.classify import classify
from pg4.counting import brute_force_census, count_order, count_self_mirror
from pg4.group import equals, fingerprint, order, quat_closure
from pg4.hopf import GreatCircle, circle_distance, hopf_map
from pg4.orbits import (
    color_orbits,
    face_planarity,
    face_regularity,
    lift_to_hyperplane,
    orbit,
    orbit_circle_polygon,
    polar_cell,
    screw_angles,
)
from pg4.toroidal import (
    canonicalize_duplicates,
    classify_toroidal,
    conjugate_seq,
    duplication_conjugator,
    duplication_rows,
)
from pg4.transform import Transform4, compose, inverse, to_matrix


def test_c01_quaternion_group_orders():
    from pg4.constants import I_I, I_O, OMEGA, QI, QJ, e_n
    t0 = time.monotonic()
    assert len(quat_closure([I_I, OMEGA])) == 120    # 2I
    assert len(quat_closure([I_O, OMEGA])) == 48     # 2O
    assert len(quat_closure([QI, OMEGA])) == 24      # 2T
    for n in range(1, 13):
        assert len(quat_closure([e_n(n)])) == 2 * n          # 2C_n
        assert len(quat_closure([e_n(n), QJ])) == 4 * n      # 2D_2n
    assert time.monotonic() - t0 < 1.0


def test_c02_tubical_orders():
    t0 = time.monotonic()
    for fam in TUBICAL_LEFT:
        info = TUBICAL_FAMILIES[fam]
        for n in range(2, 7):
            if n < info.n_min:
                continue
            assert order(build(tubical_spec(fam, n))) == info.order_factor * n
    assert time.monotonic() - t0 < 30.0


def test_c03_fingerprint():
    G = build(parse_spec("tor:|/pg:m=2,n=4"))
    want = {"0|0": 2, "0|1": 2, "1|1/4": 4, "1|3/4": 4, "1|1/2": 4, "*1/2": 16}
    assert fingerprint(G).as_dict() == want
    assert str(fingerprint(G)) == "0|0:2 0|1:2 1|1/4:4 1|3/4:4 1|1/2:4 *1/2:16"


def test_c04_counting():
    t0 = time.monotonic()
    c = count_order(100)
    assert (c.per_family["tor:1"], c.per_family["tor:."], c.per_family["tor:\\"],
            c.per_family["tor:/"], c.per_family["tor:X"]) == (113, 48, 3, 3, 1)
    assert (c.per_family["tor:|"], c.per_family["tor:+"], c.per_family["tor:L"]) \
        == (15, 7, 2)
    assert c.chiral_toroidal == 168 and c.achiral_toroidal == 24 and c.total == 192
    assert time.monotonic() - t0 < 1.0
    t0 = time.monotonic()
    c = count_order(7200)
    assert c.chiral == 19342 and c.achiral == 216
    assert time.monotonic() - t0 < 1.0
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
              67, 71, 73, 79, 83, 89, 97):
        assert count_order(p).total == (p + 3) // 2
    t0 = time.monotonic()
    assert count_self_mirror(100) == 16
    assert time.monotonic() - t0 < 1.0


def test_c05_duplications():
    rows = duplication_rows(20)
    # the worked example must be among them
    from pg4.catalog import toroidal_spec
    assert toroidal_spec("X/c2mm", m=1, n=5) in rows
    for sp in rows:
        target = canonicalize_duplicates(sp)
        hs = duplication_conjugator(sp, target)
        assert hs is not None, sp.spec_string()
        assert equals(conjugate_seq(build_unchecked(target), hs),
                      build_unchecked(sp)), sp.spec_string()
    # the worked example, with the paper's conjugators [1∓j, 1]
    from pg4.algebra import HALF, SQRT2, quat
    from pg4.transform import rotation
    from pg4.group import conjugate
    h2 = HALF * SQRT2
    h_by_parity = {3: rotation(quat(h2, 0, -h2, 0), quat(1, 0, 0, 0)),
                   1: rotation(quat(h2, 0, h2, 0), quat(1, 0, 0, 0))}
    for n in (3, 5, 7, 11, 15, 19):
        G1 = build_unchecked(toroidal_spec("X/c2mm", m=1, n=n))
        G2 = build(toroidal_spec(".", m=1, n=2 * n, s=(n - 1) // 2))
        assert equals(conjugate(G2, h_by_parity[n % 4]), G1), n


def test_c06_round_trip():
    t0 = time.monotonic()
    for sp in list_catalog(200):
        if sp.kind == "toroidal":
            assert classify_toroidal(build(sp)) == sp, sp.spec_string()
    for fam in TUBICAL_LEFT:
        info = TUBICAL_FAMILIES[fam]
        for n in range(info.n_min, 9):
            for sp in (tubical_spec(fam, n),
                       tubical_spec(info.mirror_name, n)):
                assert classify(build(sp)) == sp, sp.spec_string()
    assert time.monotonic() - t0 < 300.0


def test_c07_hopf():
    rng = np.random.default_rng(123)

    def rand_s2():
        v = rng.normal(size=3)
        return v / np.linalg.norm(v)

    # fiber constancy, 1000 trials at 1e-9
    for _ in range(1000):
        p, q0 = rand_s2(), rand_s2()
        K = GreatCircle.make(p, q0)
        x = K.sample(rng.uniform(0, 2 * pi))
        assert np.linalg.norm(hopf_map(x, q0) - p) < 1e-9
    # distance halving, 1000 trials at 1e-9
    q = rand_s2()
    for _ in range(1000):
        p, r = rand_s2(), rand_s2()
        d = circle_distance(GreatCircle.make(p, q), GreatCircle.make(r, q))
        assert abs(d - np.arccos(np.clip(np.dot(p, r), -1, 1)) / 2) < 1e-9
    # sampled minimum-distance oracle at 1e-3 (coarser grid, fewer trials)
    ths = np.linspace(0, 2 * pi, 360, endpoint=False)
    for _ in range(10):
        p, r = rand_s2(), rand_s2()
        K1, K2 = GreatCircle.make(p, q), GreatCircle.make(r, q)
        P1 = np.array([K1.sample(t) for t in ths])
        P2 = np.array([K2.sample(t) for t in ths])
        dmin = np.arccos(np.clip(P1 @ P2.T, -1, 1)).min()
        assert abs(dmin - circle_distance(K1, K2)) < 1e-3
    # bundle invariance under left rotations, 1000 trials at 1e-9
    from pg4.constants import two_I, ONE
    from pg4.hopf import transform_circle
    pool = list(two_I())
    q0 = np.array([1.0, 0.0, 0.0])
    for _ in range(1000):
        g = Transform4(False, pool[rng.integers(len(pool))], ONE)
        K = GreatCircle.make(rand_s2(), q0)
        K2 = transform_circle(g, K)
        assert np.linalg.norm(np.array(K2.q) - q0) < 1e-9


def test_c08_polygon_counts():
    for n in range(1, 25):
        sp = tubical_spec("+-[IxC]", n)
        assert orbit_circle_polygon(build(sp), sp, "5-fold") == lcm(2 * n, 10), n
    for n in range(1, 25):
        sp = tubical_spec("+-1/2[OxC2]", n)
        assert orbit_circle_polygon(build(sp), sp, "4-fold") == \
            8 * n // gcd(n - 2, 4), n
    for n in range(1, 25):
        sp = tubical_spec("+-1/3[TxC3]", n)
        G = build(sp)
        assert orbit_circle_polygon(G, sp, "3-fold-I") == 6 * n // gcd(n - 1, 3), n
        assert orbit_circle_polygon(G, sp, "3-fold-II") == 6 * n // gcd(n - 2, 3), n


def test_c09_screw_angles():
    sp = tubical_spec("+-[IxC]", 12)
    angs = screw_angles(build(sp), sp, "5-fold")
    assert [a.t / 2 for a in angs] == [Fr(2, 5) + Fr(1, 120)]
    sp = tubical_spec("+-1/2[OxC2]", 3)  # the group ±½[O×C_6]
    angs = screw_angles(build(sp), sp, "4-fold")
    assert [a.t / 2 for a in angs] == [Fr(3, 4) + Fr(1, 24)]


def test_c10_polar_cells():
    cases = (("+-[IxC]", (20, 12, 30), 5, True),
             ("+-[OxC]", (24, 14, 36), None, False),
             ("+-[TxC]", (6, 8, 12), 3, True))
    for fam, vfe, face_size, regular in cases:
        t0 = time.monotonic()
        G = build(tubical_spec(fam, 1))
        orb = orbit(G, [1, 0, 0, 0])
        at = next(p for p in orb.points if abs(p[0] - 1) < 1e-9)
        cell = polar_cell(orb, at)
        assert cell.counts() == vfe
        sizes = sorted(len(f) for f in cell.faces)
        if fam == "+-[OxC]":
            assert sizes == [3] * 8 + [8] * 6  # truncated cube
        else:
            assert all(s == face_size for s in sizes)
        for f in cell.faces:
            assert face_planarity(cell, f) < 1e-6
            if regular:
                assert face_regularity(cell, f) < 1e-6
        assert time.monotonic() - t0 < 10.0


def test_c11_colorings():
    # five orbits of 120 on the 600 vertices of the 120-cell
    GIC1 = build(tubical_spec("+-[IxC]", 1))
    orb600cells = orbit(GIC1, [1, 0, 0, 0])
    at = next(p for p in orb600cells.points if abs(p[0] - 1) < 1e-9)
    cell = polar_cell(orb600cells, at)
    v4 = lift_to_hyperplane(at, cell.vertices)
    v0 = v4[0] / np.linalg.norm(v4[0])
    GII = build(polyhedral_spec("+-[IxI]"))
    verts = orbit(GII, v0)
    assert len(verts) == 600
    classes = color_orbits(GIC1, verts.points)
    assert sorted(len(c) for c in classes) == [120] * 5
    # six orbits of 48 on the 288 vertices of the 48-cell
    GOC1 = build(tubical_spec("+-[OxC]", 1))
    orb48cells = orbit(GOC1, [1, 0, 0, 0])
    at = next(p for p in orb48cells.points if abs(p[0] - 1) < 1e-9)
    cell = polar_cell(orb48cells, at)
    v4 = lift_to_hyperplane(at, cell.vertices)
    v0 = v4[0] / np.linalg.norm(v4[0])
    GOO = build(polyhedral_spec("+-[OxO]"))
    verts = orbit(GOO, v0)
    assert len(verts) == 288
    classes = color_orbits(GOC1, verts.points)
    assert sorted(len(c) for c in classes) == [48] * 6


def test_c12_oracles():
    from pg4.constants import two_I
    from pg4.algebra import exp_i
    random.seed(99)
    pools = [list(two_I()), [exp_i(Fr(k, 9)) for k in range(18)]]
    for pool in pools:
        for _ in range(500):
            a = Transform4(random.random() < 0.5, random.choice(pool),
                           random.choice(pool))
            b = Transform4(random.random() < 0.5, random.choice(pool),
                           random.choice(pool))
            assert np.abs(to_matrix(compose(a, b))
                          - to_matrix(b) @ to_matrix(a)).max() <= 1e-9
            assert np.abs(to_matrix(inverse(a))
                          - np.linalg.inv(to_matrix(a))).max() <= 1e-9
    for N in range(1, 33):
        b = brute_force_census(N)
        c = count_order(N)
        assert b.total == c.total, N
        for key, val in b.per_family.items():
            assert c.per_family.get(key, 0) == val, (N, key)

"""Torus coordinates, lattice normalization, and toroidal classification.

On the standard Clifford torus (coordinates phi1, phi2, both mod 2pi) every
toroidal transformation is a directional part from the dihedral group D8 of
the square grid plus a translation.  The directional tag is read off the
quaternion pair: the reversing flag together with the two j-bits.

All torus data here lives in units of 2*pi, i.e. translations are pairs of
Fractions mod 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import CycloQuat, exp_i
from .catalog import (
    GroupSpec,
    SpecError,
    build_unchecked,
    constraints_ok,
    spec_order,
    toroidal_spec,
)
from .constants import MINUS_K, ONE, QI, QJ, QK
from .group import PointGroup, conjugate, equals
from .transform import Transform4, rotation

Q = Fraction

# (reversing, jbit_l, jbit_r) -> directional tag
TAG_OF_BITS = {
    (False, 0, 0): "1", (False, 1, 1): ".",
    (False, 0, 1): "/", (False, 1, 0): "\\",
    (True, 0, 0): "|", (True, 1, 1): "-",
    (True, 1, 0): "L", (True, 0, 1): "R",
}

# directional action on (phi1, phi2): (phi1, phi2) -> A(phi1, phi2) + t
TAG_ACTION = {
    "1": lambda u, v: (u, v),
    ".": lambda u, v: (-u, -v),
    "/": lambda u, v: (v, u),
    "\\": lambda u, v: (-v, -u),
    "|": lambda u, v: (-u, v),
    "-": lambda u, v: (u, -v),
    "L": lambda u, v: (-v, u),
    "R": lambda u, v: (v, -u),
}


@dataclass(frozen=True)
class TorusElement:
    tag: str
    t1: Fraction
    t2: Fraction


class NotToroidalError(ValueError):
    pass


def torus_element(g: Transform4) -> TorusElement:
    """Directional tag and exact translation part of a torus-standard element."""
    if not isinstance(g.l, CycloQuat) or not isinstance(g.r, CycloQuat):
        raise NotToroidalError("element is not toroidal in standard coordinates")
    a = g.l.t / 2  # rotation angles in units of 2*pi
    b = g.r.t / 2
    tag = TAG_OF_BITS[(g.star, g.l.jbit, g.r.jbit)]
    if tag == "1":
        t = (b - a, -a - b)
    elif tag == ".":
        t = (a - b, a + b)
    elif tag == "/":
        t = (Q(1, 2) - a - b, b - a)
    elif tag == "\\":
        t = (a + b, a - b + Q(1, 2))
    elif tag == "|":
        t = (b - a, Q(1, 2) - a - b)
    elif tag == "-":
        t = (a - b, a + b - Q(1, 2))
    elif tag == "L":
        t = (a + b - Q(1, 2), a - b + Q(1, 2))
    else:  # "R"
        t = (-a - b, b - a)
    return TorusElement(tag, t[0] % 1, t[1] % 1)


def to_torus_rep(G: PointGroup) -> list:
    return [torus_element(g) for g in G.elements]


# ---------------------------------------------------------------------------
# translation lattices

@dataclass(frozen=True)
class TorusLattice:
    m: int
    n: int
    s: int


def _lattice_points(translations) -> set:
    pts = {(t.t1, t.t2) if isinstance(t, TorusElement) else (t[0] % 1, t[1] % 1)
           for t in translations}
    pts.add((Q(0), Q(0)))
    return pts


def normalize_lattice(translations) -> TorusLattice:
    """Unique (m, n, s) of a translation lattice, s in the canonical range."""
    pts = _lattice_points(translations)
    m = sum(1 for x, y in pts if x == y)
    offsets = {(x - y) % 1 for x, y in pts}
    n = len(offsets)
    if m * n != len(pts):
        raise NotToroidalError("translation set is not a lattice")
    if n == 1:
        s0 = 0
    else:
        delta = Q(1, n)
        xs = [x for x, y in pts if (x - y) % 1 == delta]
        if not xs:
            raise NotToroidalError("missing first lattice line")
        val = (xs[0] - Q(1, n)) * m * n
        if val.denominator != 1:
            raise NotToroidalError("lattice point off the parameter grid")
        s0 = int(val) % n
    s = _canonical_s(m, n, s0)
    return TorusLattice(m, n, s)


def _canonical_s(m: int, n: int, s0: int) -> int:
    """In-range representative; prefers the unflipped class s0 + nZ."""
    lo, hi = -Q(m, 2), Q(n - m, 2)
    for base in (s0, (-m - s0) % n):
        for k in range(-(m // n + 2), 2):
            s = base + k * n
            if lo <= s <= hi:
                return s
    raise NotToroidalError(f"no canonical s for (m={m}, n={n}, s0={s0})")


def _min_positive(values):
    pos = [v for v in values if v > 0]
    return min(pos) if pos else None


# ---------------------------------------------------------------------------
# classification

def _axis_counts(pts):
    """(m, n) for axis-aligned lattices: y-step 1/m, x-step 1/n."""
    sx = _min_positive([x for x, y in pts if y == 0] + [Q(1)])
    sy = _min_positive([y for x, y in pts if x == 0] + [Q(1)])
    return int(1 / sy), int(1 / sx)


def _diag_counts(pts):
    """(M, N): points on the principal and secondary diagonals."""
    M = sum(1 for x, y in pts if x == y)
    N = sum(1 for x, y in pts if (x + y) % 1 == 0)
    return M, N


def _swap_data(G: PointGroup) -> PointGroup:
    """Conjugate by the torus swap [i, k], exchanging the two axes."""
    return conjugate(G, rotation(QI, QK))


def classify_toroidal(G: PointGroup) -> GroupSpec:
    reps = to_torus_rep(G)
    tags = frozenset(r.tag for r in reps)
    if tags == {"1", "-"}:
        return classify_toroidal(_swap_data(G))
    by_tag = {}
    for r in reps:
        by_tag.setdefault(r.tag, []).append(r)
    pts = _lattice_points(by_tag.get("1", []))

    if tags <= {"1"}:
        lat = normalize_lattice(by_tag.get("1", []))
        return canonicalize_duplicates(toroidal_spec("1", m=lat.m, n=lat.n, s=lat.s))
    if tags == {"1", "."}:
        lat = normalize_lattice(by_tag["1"])
        return canonicalize_duplicates(toroidal_spec(".", m=lat.m, n=lat.n, s=lat.s))

    if tags == {"1", "|"}:
        m, n = _axis_counts(pts)
        rhombic = len(pts) == 2 * m * n
        mirror = any(r.t2 == 0 for r in by_tag["|"])
        sub = "cm" if (mirror and rhombic) else ("pm" if mirror else "pg")
        return canonicalize_duplicates(toroidal_spec(f"|/{sub}", m=m, n=n))

    if tags == {"1", "/"} or tags == {"1", "\\"}:
        M, N = _diag_counts(pts)
        rhombic = len(pts) == M * N
        if tags == {"1", "/"}:
            mirror = any((r.t1 + r.t2) % 1 == 0 for r in by_tag["/"])
            fam = "//"
        else:
            mirror = any((r.t1 - r.t2) % 1 == 0 for r in by_tag["\\"])
            fam = "\\/"
        sub = "cm" if (mirror and rhombic) else ("pm" if mirror else "pg")
        return canonicalize_duplicates(toroidal_spec(fam + sub, m=M, n=N))

    if tags == {"1", ".", "/", "\\"}:
        M, N = _diag_counts(pts)
        rhombic = len(pts) == M * N
        mir_s = any((r.t1 + r.t2) % 1 == 0 for r in by_tag["/"])
        mir_b = any((r.t1 - r.t2) % 1 == 0 for r in by_tag["\\"])
        if mir_s and mir_b:
            sub = "c2mm" if rhombic else "p2mm"
        elif mir_s:
            sub = "p2mg"
        elif mir_b:
            sub = "p2gm"
        else:
            sub = "p2gg"
        return canonicalize_duplicates(toroidal_spec(f"X/{sub}", m=M, n=N))

    if tags == {"1", "|", "-", "."}:
        m, n = _axis_counts(pts)
        rhombic = len(pts) == 2 * m * n
        mir_v = any(r.t2 == 0 for r in by_tag["|"])
        mir_h = any(r.t1 == 0 for r in by_tag["-"])
        if mir_v and mir_h:
            sub = "c2mm" if rhombic else "p2mm"
        elif mir_v:
            sub = "p2mg"
        elif mir_h:
            sub, m, n = "p2mg", n, m
        else:
            sub = "p2gg"
        if sub in ("p2mm", "p2gg", "c2mm") and m < n:
            m, n = n, m
        return canonicalize_duplicates(toroidal_spec(f"+/{sub}", m=m, n=n))

    if tags == {"1", ".", "L", "R"}:
        a, b = _square_lattice_params(pts)
        return canonicalize_duplicates(toroidal_spec("L", a=a, b=b))

    if tags == {"1", ".", "/", "\\", "|", "-", "L", "R"}:
        c2 = len(pts)
        k = _isqrt_exact(c2)
        if k is not None:
            sub_kind, nn = "U", k
        else:
            k = _isqrt_exact(c2 // 2) if c2 % 2 == 0 else None
            if k is None:
                raise NotToroidalError("full torus group with non-square lattice")
            sub_kind, nn = "S", k
        mirrors = sum([
            any(r.t2 == 0 for r in by_tag["|"]),
            any(r.t1 == 0 for r in by_tag["-"]),
            any((r.t1 + r.t2) % 1 == 0 for r in by_tag["/"]),
            any((r.t1 - r.t2) % 1 == 0 for r in by_tag["\\"]),
        ])
        sub = "p4mm" if mirrors == 4 else "p4gm"
        return canonicalize_duplicates(toroidal_spec(f"*/{sub}{sub_kind}", n=nn))

    raise NotToroidalError(f"unrecognized directional group {sorted(tags)}")


def _isqrt_exact(x: int):
    from math import isqrt
    k = isqrt(x)
    return k if k * k == x else None


def _square_lattice_params(pts):
    """(a, b) with a >= b >= 0 for a square lattice of a^2 + b^2 points."""
    c2 = len(pts)
    best = None
    for x, y in pts:
        if (x, y) == (0, 0):
            continue
        n2 = x * x + y * y
        if best is None or n2 < best[0]:
            best = (n2, x, y)
    if best is None:
        return (1, 0) if c2 == 1 else (0, 0)
    _, x, y = best
    a, b = abs(x * c2), abs(y * c2)
    if a.denominator != 1 or b.denominator != 1:
        raise NotToroidalError("lattice is not a square sublattice of the grid")
    a, b = int(a), int(b)
    if a < b:
        a, b = b, a
    if a * a + b * b != c2:
        raise NotToroidalError("minimal vector does not generate the square lattice")
    return a, b


# ---------------------------------------------------------------------------
# duplications

def _dup_target(spec: GroupSpec):
    """Canonical partner of a constraint-excluded toroidal spec, if known."""
    fam = spec.family
    p = dict(spec.params)
    if fam in ("+/p2mm", "+/p2gg", "+/c2mm") and p["m"] < p["n"]:
        return toroidal_spec(fam, m=p["n"], n=p["m"])
    if fam == "L" and p["a"] < p["b"]:
        return toroidal_spec("L", a=p["b"], b=p["a"])
    if fam == "X/c2mm" and p["m"] == 1 and p["n"] % 2 == 1:
        n = p["n"]
        return toroidal_spec(".", m=1, n=2 * n, s=(n - 1) // 2)
    # explicit small chains from the duplication list
    chains = {
        ("//cm", (1, 1)): ("1", dict(m=1, n=2, s=0)),
        ("\\/cm", (1, 1)): ("1", dict(m=1, n=2, s=0)),
        (".", (1, 1)): ("1", dict(m=1, n=2, s=0)),
        ("//pm", (2, 2)): ("1", dict(m=2, n=2, s=0)),
        ("\\/pm", (2, 2)): ("1", dict(m=2, n=2, s=0)),
        (".", (2, 1)): ("1", dict(m=2, n=2, s=0)),
        ("X/p2gg", (2, 2)): ("1", dict(m=4, n=2, s=-2)),
        ("//pm", (4, 2)): ("1", dict(m=4, n=2, s=-2)),
        ("\\/pm", (2, 4)): ("1", dict(m=4, n=2, s=-2)),
        ("X/p2gm", (2, 2)): (".", dict(m=2, n=2, s=-1)),
        ("//cm", (2, 2)): (".", dict(m=2, n=2, s=-1)),
        ("//pm", (2, 4)): (".", dict(m=2, n=2, s=-1)),
        ("X/p2mg", (2, 2)): (".", dict(m=4, n=1, s=-2)),
        ("\\/cm", (2, 2)): (".", dict(m=4, n=1, s=-2)),
        ("\\/pm", (4, 2)): (".", dict(m=4, n=1, s=-2)),
        ("*/p4gmU", (1,)): ("+/p2gg", dict(m=2, n=1)),
        ("X/c2mm", (2, 2)): (".", dict(m=4, n=2, s=-2)),
    }
    key = (fam, tuple(v for _, v in spec.params))
    if key in chains:
        f2, p2 = chains[key]
        return toroidal_spec(f2, **p2)
    return None


def canonicalize_duplicates(spec: GroupSpec) -> GroupSpec:
    """Map a toroidal spec to the representative kept in the overview table."""
    if spec.kind != "toroidal":
        return spec
    if spec.family in ("1", "."):
        p = dict(spec.params)
        s = _canonical_s(p["m"], p["n"], p["s"] % p["n"])
        spec = toroidal_spec(spec.family, m=p["m"], n=p["n"], s=s)
    if constraints_ok(spec):
        return spec
    seen = {spec}
    cur = spec
    while not constraints_ok(cur):
        nxt = _dup_target(cur)
        if nxt is None:
            nxt = _searched_duplicate(cur)
        if nxt is None or nxt in seen:
            raise SpecError(f"no canonical form found for {cur.spec_string()}")
        seen.add(nxt)
        cur = nxt
    return cur


def _alt_torus_quats():
    """Representatives of quaternions moving the standard torus axis i."""
    from .algebra import HALF, SQRT2, quat
    h2 = HALF * SQRT2
    return [
        ONE,
        quat(h2, 0, h2, 0), quat(h2, 0, -h2, 0),   # (1±j)/sqrt2: i -> ∓k
        quat(h2, 0, 0, h2), quat(h2, 0, 0, -h2),   # (1±k)/sqrt2: i -> ±j
        quat(0, 0, h2, h2),                         # i_O: i -> -i
    ]


def _translation_conj(d1: Fraction, d2: Fraction) -> Transform4:
    """The torus translation R_{2pi d1, 2pi d2} as a conjugator."""
    return rotation(exp_i(-(d1 + d2)), exp_i(d1 - d2))


_D8_CHIRAL = None


def _d8_chiral():
    global _D8_CHIRAL
    if _D8_CHIRAL is None:
        _D8_CHIRAL = [
            rotation(ONE, ONE),
            rotation(QJ, QJ),
            rotation(QI, QK),
            rotation(MINUS_K, QI),
        ]
    return _D8_CHIRAL


def _delta_candidates(tag: str, src: TorusElement, targets) -> set:
    """Solutions delta of (A_tag - I) delta = t_tgt - t_src (mod 1)."""
    H = Q(1, 2)
    out = set()
    for tgt in targets:
        # conjugation by R_delta sends t to t - (A - I) delta
        D1, D2 = (src.t1 - tgt.t1) % 1, (src.t2 - tgt.t2) % 1
        if tag == ".":
            b1, b2 = -D1 / 2 % 1, -D2 / 2 % 1
            out.update(((b1 + k1) % 1, (b2 + k2) % 1)
                       for k1 in (0, H) for k2 in (0, H))
        elif tag == "|":
            if D2 % 1 == 0:
                b1 = -D1 / 2 % 1
                out.update(((b1 + k) % 1, Q(0)) for k in (0, H))
        elif tag == "-":
            if D1 % 1 == 0:
                b2 = -D2 / 2 % 1
                out.update((Q(0), (b2 + k) % 1) for k in (0, H))
        elif tag == "/":
            # (A-I)delta = (d2-d1, d1-d2)
            if (D1 + D2) % 1 == 0:
                out.add((Q(0), D1 % 1))
                out.add((H, (D1 + H) % 1))
        elif tag == "\\":
            # (A-I)delta = -(d1+d2)*(1,1)
            if (D1 - D2) % 1 == 0:
                out.add(((-D1) % 1, Q(0)))
        elif tag == "L":
            # A delta = (-d2, d1): solve d1+d2 = -D1, d1-d2 = D2
            b1, b2 = (-D1 + D2) / 2 % 1, (-D1 - D2) / 2 % 1
            out.update(((b1 + k) % 1, (b2 + k) % 1) for k in (0, H))
        elif tag == "R":
            # A delta = (d2, -d1): solve d2-d1 = D1, -(d1+d2) = D2
            b1, b2 = (-D1 - D2) / 2 % 1, (D1 - D2) / 2 % 1
            out.update(((b1 + k) % 1, (b2 + k) % 1) for k in (0, H))
    return out


def _probe_equal(G1: PointGroup, G2: PointGroup, h: Transform4) -> bool:
    from .transform import conjugate_elem
    probes = sorted(G2.elements, key=lambda g: (not g.star, g._hash))[:4]
    try:
        if any(conjugate_elem(g, h) not in G1.elements for g in probes):
            return False
        return equals(conjugate(G2, h), G1)
    except Exception:
        return False


def _standard_conjugator(G1: PointGroup, G2: PointGroup):
    """Torus-preserving h (directional part + origin shift) with h^-1 G2 h = G1."""
    from collections import Counter
    from .transform import compose
    try:
        reps1 = to_torus_rep(G1)
    except NotToroidalError:
        return None
    tags1 = Counter(r.tag for r in reps1)
    for hd in _d8_chiral():
        try:
            G2d = conjugate(G2, hd)
            reps2 = to_torus_rep(G2d)
        except Exception:
            continue
        if Counter(r.tag for r in reps2) != tags1:
            continue
        nontriv = sorted((r for r in reps2 if r.tag != "1"),
                         key=lambda r: (r.tag, r.t1, r.t2))
        if not nontriv:
            if G2d.elements == G1.elements:
                return hd
            continue
        pref = ["L", "R", ".", "|", "-", "/", "\\"]
        tag = next(t for t in pref if tags1.get(t))
        src = next(r for r in nontriv if r.tag == tag)
        targets = [r for r in reps1 if r.tag == tag]
        for d1, d2 in _delta_candidates(tag, src, targets):
            hdelta = _translation_conj(d1, d2)
            if _probe_equal(G1, G2d, hdelta):
                return compose(hd, hdelta)
    return None


@lru_cache(maxsize=None)
def _built(spec: GroupSpec) -> PointGroup:
    return build_unchecked(spec)


@lru_cache(maxsize=None)
def _fp_string(spec: GroupSpec) -> str:
    from .group import fingerprint
    return str(fingerprint(_built(spec)))


def conjugate_seq(G: PointGroup, hs) -> PointGroup:
    """Conjugate by the product of the given transformations, stepwise exact."""
    for h in hs:
        G = conjugate(G, h)
    return G


@lru_cache(maxsize=None)
def duplication_conjugator(spec1: GroupSpec, spec2: GroupSpec):
    """Conjugation chain hs with build(spec1) = conjugate_seq(build(spec2), hs).

    A single transformation when the composite is exactly representable,
    otherwise the exact two-step chain (alternate-torus part, standard part).
    """
    from .transform import compose
    G1 = _built(spec1)
    G2 = _built(spec2)
    if len(G1.elements) != len(G2.elements):
        return None
    for ul in _alt_torus_quats():
        for ur in _alt_torus_quats():
            h1 = rotation(ul, ur)
            try:
                G2a = conjugate(G2, h1)
                to_torus_rep(G2a)
            except Exception:
                continue
            h2 = _standard_conjugator(G1, G2a)
            if h2 is None:
                continue
            try:
                h = compose(h1, h2)
                if _probe_equal(G1, G2, h):
                    return (h,)
            except Exception:
                pass
            return (h1, h2)
    return None


def _searched_duplicate(spec: GroupSpec):
    N = spec_order(spec)
    fp = _fp_string(spec)
    from .catalog import _toroidal_specs_of_order
    for cand in _toroidal_specs_of_order(N):
        if _fp_string(cand) != fp:
            continue
        if duplication_conjugator(spec, cand) is not None:
            return cand
    return None


def duplication_rows(max_param: int = 20):
    """All constraint-excluded toroidal specs with parameters <= max_param."""
    rows = []
    for m in (1, 2):
        for n in range(1, max_param + 1):
            for fam in ("\\/cm", "//cm", "X/c2mm"):
                if (m - n) % 2 == 0:
                    rows.append(toroidal_spec(fam, m=m, n=n))
                    if m != n:
                        rows.append(toroidal_spec(fam, m=n, n=m))
    for N in range(2, max_param + 1, 2):
        for fam in ("\\/pm", "//pm", "X/p2mm", "X/p2mg", "X/p2gm", "X/p2gg"):
            rows.append(toroidal_spec(fam, m=2, n=N))
            if N != 2:
                rows.append(toroidal_spec(fam, m=N, n=2))
        rows.append(toroidal_spec("\\/pg", m=2, n=N))
        rows.append(toroidal_spec("//pg", m=N, n=2))
    rows.append(toroidal_spec(".", m=1, n=1, s=0))
    rows.append(toroidal_spec(".", m=2, n=1, s=-1))
    for fam in ("+/p2mm", "+/p2mg", "+/p2gg", "+/c2mm"):
        rows.append(toroidal_spec(fam, m=1, n=1))
    rows += [toroidal_spec("L", a=1, b=0), toroidal_spec("L", a=1, b=1),
             toroidal_spec("L", a=2, b=0)]
    rows += [toroidal_spec("*/p4mmU", n=1), toroidal_spec("*/p4mmU", n=2),
             toroidal_spec("*/p4gmU", n=1), toroidal_spec("*/p4gmU", n=2),
             toroidal_spec("*/p4mmS", n=1), toroidal_spec("*/p4gmS", n=1)]
    return [r for r in rows if not constraints_ok(r)]

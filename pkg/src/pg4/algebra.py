"""Exact scalars and unit quaternions.

Two scalar domains cover everything the catalog needs:

* ``FieldElem`` -- elements of the degree-4 field Q(sqrt2, sqrt5) with basis
  (1, sqrt2, sqrt5, sqrt10).  The binary polyhedral groups 2T, 2O, 2I have all
  their coordinates here.  sqrt3 is deliberately not representable.
* ``AngleFraction`` -- a rational t standing for the angle t*pi, reduced mod 2.

Quaternions come in two exact representations:

* ``AlgQuat`` -- coordinates w + x i + y j + z k as FieldElems.
* ``CycloQuat`` -- exp(t*pi*i) or exp(t*pi*i)*j, i.e. an angle fraction plus a
  j-bit.  This covers cyclic and dihedral factors of arbitrary order, whose
  coordinates would need number fields of unbounded degree.

A quaternion that lies on the i-circle (or its j-translate) is always stored
as a CycloQuat; mixed products promote the CycloQuat side into the field,
which is possible exactly when the angle denominator divides 4.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import cos, gcd, pi, sin
from typing import Union

Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)
_FH = Fraction(1, 2)


class FieldElem:
    """a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)
        self._hash = hash((self.a, self.b, self.c, self.d))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        if isinstance(other, (int, Fraction)):
            return self.a == other and not (self.b or self.c or self.d)
        return NotImplemented

    def __add__(self, other):
        other = _coerce(other)
        return FieldElem(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return FieldElem(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return FieldElem(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        other = _coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return FieldElem(
            a1 * a2 + 2 * b1 * b2 + 5 * c1 * c2 + 10 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero field element")
        # multiply by the three Galois conjugates; the product is rational
        c2 = FieldElem(self.a, -self.b, self.c, -self.d)
        c5 = FieldElem(self.a, self.b, -self.c, -self.d)
        c25 = FieldElem(self.a, -self.b, -self.c, self.d)
        y = c2 * c5 * c25
        n = self * y
        assert not (n.b or n.c or n.d)
        return FieldElem(y.a / n.a, y.b / n.a, y.c / n.a, y.d / n.a)

    def is_zero(self):
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self):
        return not (self.b or self.c or self.d)

    def __float__(self):
        return float(self.a) + float(self.b) * 1.4142135623730951 \
            + float(self.c) * 2.23606797749979 + float(self.d) * 3.1622776601683795

    def key(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"FieldElem({self.a},{self.b},{self.c},{self.d})"


def _coerce(x) -> FieldElem:
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem(x)
    raise TypeError(f"cannot coerce {type(x)} into Q(sqrt2,sqrt5)")


F = FieldElem
SQRT2 = FieldElem(0, 1)
SQRT5 = FieldElem(0, 0, 1)
SQRT10 = FieldElem(0, 0, 0, 1)
HALF = FieldElem(_FH)


class AngleFraction:
    """Rational t meaning the angle t*pi, kept in [0, 2)."""

    __slots__ = ("t",)

    def __init__(self, t):
        self.t = Fraction(t) % 2

    def __add__(self, other):
        return AngleFraction(self.t + _angle_t(other))

    def __sub__(self, other):
        return AngleFraction(self.t - _angle_t(other))

    def __neg__(self):
        return AngleFraction(-self.t)

    def __mul__(self, k: int):
        return AngleFraction(self.t * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, AngleFraction):
            return self.t == other.t
        if isinstance(other, (int, Fraction)):
            return self.t == Fraction(other) % 2
        return NotImplemented

    def __lt__(self, other):
        return self.t < _angle_t(other)

    def __le__(self, other):
        return self.t <= _angle_t(other)

    def __hash__(self):
        return hash(self.t)

    def radians(self) -> float:
        return float(self.t) * pi

    def __repr__(self):
        return f"AngleFraction({self.t})"


def _angle_t(x) -> Fraction:
    if isinstance(x, AngleFraction):
        return x.t
    return Fraction(x) % 2


class AlgQuat:
    """Unit quaternion w + x i + y j + z k with FieldElem coordinates."""

    __slots__ = ("w", "x", "y", "z", "_hash", "_negq")

    def __init__(self, w, x, y, z):
        self.w = _coerce(w)
        self.x = _coerce(x)
        self.y = _coerce(y)
        self.z = _coerce(z)
        self._hash = hash((1, self.w._hash, self.x._hash, self.y._hash, self.z._hash))
        self._negq = None

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, AlgQuat)
            and self.w == other.w and self.x == other.x
            and self.y == other.y and self.z == other.z
        )

    def norm2(self) -> FieldElem:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def __repr__(self):
        return f"AlgQuat({self.w},{self.x},{self.y},{self.z})"


class CycloQuat:
    """exp(t*pi*i) if jbit is 0, else exp(t*pi*i)*j; t rational in [0, 2).

    Instances are interned on the reduced (numerator, denominator, jbit)
    triple; the angle is stored as plain integers for speed.
    """

    __slots__ = ("num", "den", "jbit", "_hash", "_neg")

    def __init__(self, t, jbit: int = 0):
        t = Fraction(t) % 2
        self.num = t.numerator
        self.den = t.denominator
        self.jbit = 1 if jbit else 0
        self._hash = hash((0, self.num, self.den, self.jbit))
        self._neg = None

    @property
    def t(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (isinstance(other, CycloQuat) and self.num == other.num
                and self.den == other.den and self.jbit == other.jbit)

    def __repr__(self):
        return f"CycloQuat({self.num}/{self.den},j={self.jbit})"


_CYC_CACHE: dict = {}


def _cyc(num: int, den: int, jbit: int) -> CycloQuat:
    """Interned CycloQuat from a reduced angle in [0, 2)."""
    key = (num, den, jbit)
    q = _CYC_CACHE.get(key)
    if q is None:
        q = CycloQuat.__new__(CycloQuat)
        q.num = num
        q.den = den
        q.jbit = jbit
        q._hash = hash((0, num, den, jbit))
        q._neg = None
        _CYC_CACHE[key] = q
    return q


def _cyc_make(num: int, den: int, jbit: int) -> CycloQuat:
    """Interned CycloQuat from an unreduced angle numerator/denominator."""
    num %= 2 * den
    g = gcd(num, den)
    return _cyc(num // g, den // g, jbit)


Quat = Union[AlgQuat, CycloQuat]


class RepresentationError(ValueError):
    """Raised for non-promotable mixed-representation arithmetic."""


# exact cos/sin for angles t*pi with denominator dividing 4
_EIGHTH = {
    Fraction(0): (F(1), F(0)),
    Fraction(1, 4): (HALF * SQRT2, HALF * SQRT2),
    Fraction(1, 2): (F(0), F(1)),
    Fraction(3, 4): (-HALF * SQRT2, HALF * SQRT2),
    Fraction(1): (F(-1), F(0)),
    Fraction(5, 4): (-HALF * SQRT2, -HALF * SQRT2),
    Fraction(3, 2): (F(0), F(-1)),
    Fraction(7, 4): (HALF * SQRT2, -HALF * SQRT2),
}
_EIGHTH_INV = {cs: t for t, cs in _EIGHTH.items()}


def quat(w, x, y, z) -> Quat:
    """Canonical exact quaternion from field coordinates."""
    q = AlgQuat(w, x, y, z)
    return _demote(q) or q


def _demote(q: AlgQuat):
    # circle forms with angle denominator | 4 are stored as CycloQuat
    if q.y.is_zero() and q.z.is_zero():
        t = _EIGHTH_INV.get((q.w, q.x))
        if t is not None:
            return CycloQuat(t, 0)
    elif q.w.is_zero() and q.x.is_zero():
        t = _EIGHTH_INV.get((q.y, q.z))
        if t is not None:
            return CycloQuat(t, 1)
    return None


@lru_cache(maxsize=None)
def _promote(c: CycloQuat) -> AlgQuat:
    cs = _EIGHTH.get(c.t)
    if cs is None:
        raise RepresentationError(f"angle {c.t}*pi does not lie in Q(sqrt2,sqrt5)")
    if c.jbit:
        return AlgQuat(F(0), F(0), cs[0], cs[1])
    return AlgQuat(cs[0], cs[1], F(0), F(0))


def promotable(q: Quat) -> bool:
    return isinstance(q, AlgQuat) or q.den in (1, 2, 4)


_ALG_MUL_CACHE: dict = {}


def _alg_mul(a: AlgQuat, b: AlgQuat) -> Quat:
    key = (a, b)
    r = _ALG_MUL_CACHE.get(key)
    if r is None:
        w1, x1, y1, z1 = a.w, a.x, a.y, a.z
        w2, x2, y2, z2 = b.w, b.x, b.y, b.z
        q = AlgQuat(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )
        r = _demote(q) or q
        _ALG_MUL_CACHE[key] = r
    return r


def quat_mul(a: Quat, b: Quat) -> Quat:
    if type(a) is CycloQuat and type(b) is CycloQuat:
        # exp(sπi) j^u · exp(tπi) j^v, using j exp(tπi) = exp(−tπi) j
        n1, d1, n2, d2 = a.num, a.den, b.num, b.den
        if a.jbit:
            num = n1 * d2 - n2 * d1
            if b.jbit:
                return _cyc_make(num + d1 * d2, d1 * d2, 0)
            return _cyc_make(num, d1 * d2, 1)
        return _cyc_make(n1 * d2 + n2 * d1, d1 * d2, b.jbit)
    if type(a) is CycloQuat:
        a = _promote(a)
    if type(b) is CycloQuat:
        b = _promote(b)
    return _alg_mul(a, b)


def quat_conj(a: Quat) -> Quat:
    if type(a) is CycloQuat:
        if a.jbit:
            return _cyc_make(a.num + a.den, a.den, 1)
        return _cyc_make(-a.num, a.den, 0)
    return AlgQuat(a.w, -a.x, -a.y, -a.z)


def quat_neg(a: Quat) -> Quat:
    if type(a) is CycloQuat:
        q = a._neg
        if q is None:
            q = _cyc_make(a.num + a.den, a.den, a.jbit)
            a._neg = q
        return q
    q = getattr(a, "_negq", None)
    if q is None:
        q = AlgQuat(-a.w, -a.x, -a.y, -a.z)
        a._negq = q
    return q


def quat_sign_flip(a: Quat) -> bool:
    """True when -a has the smaller encoding, i.e. (l, r) must be negated."""
    if type(a) is CycloQuat:
        return (a.num + a.den) % (2 * a.den) < a.num
    return quat_key(quat_neg(a)) < quat_key(a)


def quat_real(a: Quat) -> FieldElem:
    """Real part; exact, so CycloQuat angles must lie in the field."""
    if isinstance(a, CycloQuat):
        if a.jbit:
            return F(0)
        return _promote(a).w
    return a.w


def quat_is_unit(a: Quat) -> bool:
    if isinstance(a, CycloQuat):
        return True
    return a.norm2() == 1


ONE = CycloQuat(0, 0)
MINUS_ONE = CycloQuat(1, 0)
I = CycloQuat(Fraction(1, 2), 0)
J = CycloQuat(0, 1)
K = CycloQuat(Fraction(1, 2), 1)


def exp_i(t) -> CycloQuat:
    """exp(t*pi*i) as a CycloQuat."""
    return CycloQuat(t, 0)


# real parts occurring in 2I ∪ 2O ∪ 2T, mapped to the unsigned angle fraction
_ARCCOS = {
    F(1).key(): Fraction(0),
    F(-1).key(): Fraction(1),
    F(0).key(): Fraction(1, 2),
    HALF.key(): Fraction(1, 3),
    (-HALF).key(): Fraction(2, 3),
    (HALF * SQRT2).key(): Fraction(1, 4),
    (-HALF * SQRT2).key(): Fraction(3, 4),
    ((F(1) + SQRT5) * Fraction(1, 4)).key(): Fraction(1, 5),
    ((SQRT5 - 1) * Fraction(1, 4)).key(): Fraction(2, 5),
    ((F(1) - SQRT5) * Fraction(1, 4)).key(): Fraction(3, 5),
    ((-F(1) - SQRT5) * Fraction(1, 4)).key(): Fraction(4, 5),
}


def angle_of(q: Quat) -> AngleFraction:
    """Unsigned fraction a in [0,1] with cos(a*pi) = Re(q)."""
    if isinstance(q, CycloQuat):
        if q.jbit:
            return AngleFraction(Fraction(1, 2))
        return AngleFraction(min(Fraction(q.num, q.den), Fraction(2 * q.den - q.num, q.den)))
    a = _ARCCOS.get(q.w.key())
    if a is None:
        raise ValueError(f"real part {q.w!r} outside the arccos lookup table")
    return AngleFraction(a)


def quat_order(q: Quat) -> int:
    """Multiplicative order of a catalog quaternion."""
    a = angle_of(q).t
    if a == 0:
        return 1
    if isinstance(q, CycloQuat) and q.jbit:
        return 4
    # q = exp(a*pi*u): order is the least k with k*a ≡ 0 (mod 2)
    k = 2 * a.denominator
    if a.numerator % 2 == 0:
        k //= 2
    return k


def quat_float4(q: Quat):
    if isinstance(q, CycloQuat):
        th = q.num * pi / q.den
        if q.jbit:
            return (0.0, 0.0, cos(th), sin(th))
        return (cos(th), sin(th), 0.0, 0.0)
    return (float(q.w), float(q.x), float(q.y), float(q.z))


def quat_key(q: Quat):
    """Total order on quaternion encodings, for canonical signs."""
    if isinstance(q, CycloQuat):
        return (0, q.num, q.den, q.jbit)
    return (1,) + q.w.key() + q.x.key() + q.y.key() + q.z.key()


def quat_to_json(q: Quat):
    if isinstance(q, CycloQuat):
        return {"cyc": {"t": str(q.t), "j": bool(q.jbit)}}
    return {"alg": [[str(f) for f in c.key()] for c in q.coords()]}


def quat_from_json(obj) -> Quat:
    if "cyc" in obj:
        return CycloQuat(Fraction(obj["cyc"]["t"]), 1 if obj["cyc"]["j"] else 0)
    coords = [FieldElem(*(Fraction(s) for s in row)) for row in obj["alg"]]
    return quat(*coords)

"""Exact arithmetic in Q(phi), phi = (1 + sqrt 5) / 2.

Elements are stored as ``a + b*phi`` with rational ``a`` and ``b``.  There is
deliberately no float constructor: everything built on top of this module
(polyhedron coordinates, antipode detection, orientation tests) is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

Rational = Union[int, Fraction]


class GoldenRational:
    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0):
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("GoldenRational takes exact rationals only")
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, x) -> GoldenRational:
        if isinstance(x, GoldenRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to GoldenRational")

    def __repr__(self):
        return f"GoldenRational({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*phi"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*phi"

    def __eq__(self, other):
        try:
            other = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __neg__(self):
        return GoldenRational(-self.a, -self.b)

    def __add__(self, other):
        try:
            other = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenRational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenRational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return GoldenRational.coerce(other) - self

    def __mul__(self, other):
        try:
            other = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        # (a + b phi)(c + d phi) with phi^2 = phi + 1
        a, b, c, d = self.a, self.b, other.a, other.b
        return GoldenRational(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conjugate(self) -> GoldenRational:
        """Galois conjugate: phi -> 1 - phi."""
        return GoldenRational(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> GoldenRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(phi)")
        c = self.conjugate()
        return GoldenRational(c.a / n, c.b / n)

    def __truediv__(self, other):
        try:
            other = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GoldenRational.coerce(other) * self.inverse()

    def sign(self) -> int:
        # a + b phi = p + q sqrt5 with p = a + b/2, q = b/2
        p = self.a + self.b / 2
        q = self.b / 2
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if (p > 0) == (q > 0):
            return 1 if p > 0 else -1
        # opposite signs: the larger magnitude wins
        if p * p > 5 * q * q:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def __lt__(self, other):
        return (self - GoldenRational.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - GoldenRational.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - GoldenRational.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - GoldenRational.coerce(other)).sign() >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def to_json(self) -> list:
        return [[self.a.numerator, self.a.denominator], [self.b.numerator, self.b.denominator]]

    @classmethod
    def from_json(cls, data) -> GoldenRational:
        (an, ad), (bn, bd) = data
        return cls(Fraction(an, ad), Fraction(bn, bd))


PHI = GoldenRational(0, 1)
ZERO = GoldenRational(0)
ONE = GoldenRational(1)


class GVec3(NamedTuple):
    x: GoldenRational
    y: GoldenRational
    z: GoldenRational

    @classmethod
    def of(cls, x, y, z) -> GVec3:
        c = GoldenRational.coerce
        return cls(c(x), c(y), c(z))

    def __neg__(self):
        return GVec3(-self.x, -self.y, -self.z)

    def __add__(self, other):
        return GVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return GVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def scale(self, k) -> GVec3:
        return GVec3(self.x * k, self.y * k, self.z * k)

    def dot(self, other) -> GoldenRational:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other) -> GVec3:
        return GVec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self) -> GoldenRational:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def to_json(self) -> list:
        return [self.x.to_json(), self.y.to_json(), self.z.to_json()]


def triple(u: GVec3, v: GVec3, w: GVec3) -> GoldenRational:
    """Scalar triple product u . (v x w)."""
    return u.dot(v.cross(w))

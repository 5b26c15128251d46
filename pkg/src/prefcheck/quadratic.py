"""Exact arithmetic over Q(sqrt(2)) and a unit-interval carrier on it.

Numbers are pairs (a, b) standing for a + b*sqrt(2); the representation is
unique, so rationality is exactly `b == 0`.  This is enough to mix points
with both rational and quadratic weights and to decide signs exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .spaces import MixtureSpace, Point


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def quad_sign(a: Fraction, b: Fraction) -> int:
    """Sign of a + b*sqrt(2), decided by comparing squares."""
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    s = _sign(a * a - 2 * b * b)  # never 0: sqrt(2) is irrational
    return s if a > 0 else -s


@dataclass(frozen=True)
class QuadRat:
    a: Fraction
    b: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "QuadRat":
        if isinstance(value, QuadRat):
            return value
        return QuadRat(Fraction(value))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        return quad_sign(self.a, self.b)

    def __add__(self, other):
        other = QuadRat.of(other)
        return QuadRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QuadRat.of(other))

    def __rsub__(self, other):
        return QuadRat.of(other) + (-self)

    def __mul__(self, other):
        other = QuadRat.of(other)
        return QuadRat(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def _cmp(self, other) -> int:
        return (self - QuadRat.of(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"({self.a} + {self.b}*sqrt2)"


def quad_pt(a, b=0) -> Point:
    """Carrier point for the value a + b*sqrt(2)."""
    return Point((Fraction(a), Fraction(b)))


def point_value(p: Point) -> QuadRat:
    return QuadRat(p.coords[0], p.coords[1])


def is_rational_point(p: Point) -> bool:
    return p.coords[1] == 0


@dataclass(frozen=True)
class RootTwoUnitInterval(MixtureSpace):
    """The real interval [0,1] restricted to Q(sqrt(2)) coordinates."""

    kind = "root2_interval"

    def contains(self, p: Point) -> bool:
        if p.part is not None or len(p.coords) != 2:
            return False
        v = point_value(p)
        return v.sign() >= 0 and (v - 1).sign() <= 0

    def mix(self, x: Point, lam, y: Point) -> Point:
        if isinstance(lam, QuadRat):
            v = lam * point_value(x) + (1 - lam) * point_value(y)
            return Point((v.a, v.b))
        return Point(tuple(lam * a + (1 - lam) * b for a, b in zip(x.coords, y.coords)))

    def descriptor(self) -> dict:
        return {"kind": "root2_interval"}

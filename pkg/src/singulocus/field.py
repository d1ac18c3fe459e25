"""Exact coefficient arithmetic: rationals (the default field) and GF(p) for engine stress tests."""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q


class GFElement:
    """An element of the prime field GF(p).  Only used by randomized engine tests."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other
        return GFElement(self.p, int(other))

    def __add__(self, other):
        o = self._lift(other)
        return GFElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return GFElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return GFElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.p, self.v * pow(o.v, -1, self.p))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"{self.v}"


class FieldQQ:
    """The field of arbitrary-precision rationals."""

    name = "QQ"
    characteristic = 0

    def __call__(self, num, den=1):
        return Q(num, den)

    @property
    def zero(self):
        return Q(0)

    @property
    def one(self):
        return Q(1)

    def __eq__(self, other):
        return isinstance(other, FieldQQ)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class FieldGF:
    """The prime field GF(p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p

    def __call__(self, num, den=1):
        return GFElement(self.p, num) / GFElement(self.p, den)

    @property
    def zero(self):
        return GFElement(self.p, 0)

    @property
    def one(self):
        return GFElement(self.p, 1)

    def __eq__(self, other):
        return isinstance(other, FieldGF) and self.p == other.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = FieldQQ()

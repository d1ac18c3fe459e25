"""Sparse exact polynomials and the ambient ring description.

A ``RingSpec`` models k[x]/Q with a global order, or its localization at the
origin when the order is local.  A ``Poly`` is a term map monomial -> coefficient
with no zero coefficients stored; all values are immutable after construction.
"""

from __future__ import annotations

from .field import QQ, FieldQQ
from .orders import MonomialOrder, ORDERS


class RingMismatch(ValueError):
    pass


class Poly:
    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: "RingSpec", terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- basic predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def is_unit(self) -> bool:
        """Unit in the modeled ring: nonzero constant, or (locally) nonzero constant term."""
        if self.ring.local:
            return self.constant_term() != 0 and bool(self.constant_term())
        return bool(self.terms) and self.is_constant()

    def constant_term(self):
        zero = (0,) * len(self.ring.vars)
        return self.terms.get(zero, self.ring.field.zero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    # -- leading data -------------------------------------------------------
    def lead_monomial(self):
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "Poly"):
        if not self.ring.compatible(other.ring):
            raise RingMismatch("polynomials over different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s:
                    t[m] = s
                else:
                    del t[m]
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            # bare field scalar
            if not other:
                return self.ring.zero
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = t.get(m)
                if s is None:
                    t[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        t[m] = s
                    else:
                        del t[m]
        return Poly(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == self.ring.field.one:
            return self
        return Poly(self.ring, {m: c / lc for m, c in self.terms.items()})

    def diff(self, i: int) -> "Poly":
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < len(self.ring.vars):
            raise IndexError("variable index out of range")
        t = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1 :]
                nc = c * e
                s = t.get(mm)
                t[mm] = nc if s is None else s + nc
        return Poly(self.ring, {m: c for m, c in t.items() if c})

    def subs(self, values: dict):
        """Evaluate at a point {varname: field scalar}; used by test oracles."""
        total = self.ring.field.zero
        idx = {v: k for k, v in enumerate(self.ring.vars)}
        pt = [values[v] for v in self.ring.vars]
        for m, c in self.terms.items():
            term = c
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * pt[i]
            total = total + term
        return total

    # -- equality / text ----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, int):
                return self == self.ring.const(other)
            return NotImplemented
        return self.ring.compatible(other.ring) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.vars
        parts = []
        for m in sorted(self.terms, key=self.ring.order.key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            cs = str(c)
            if factors:
                if cs == "1":
                    body = "*".join(factors)
                elif cs == "-1":
                    body = "-" + "*".join(factors)
                else:
                    body = cs + "*" + "*".join(factors)
            else:
                body = cs
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


class RingSpec:
    """Variables, coefficient field, monomial order and optional quotient ideal Q."""

    def __init__(self, varnames, order: MonomialOrder, field=QQ, quotient=()):
        self.vars = tuple(varnames)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.order = order if isinstance(order, MonomialOrder) else ORDERS[order]
        self.field = field
        self.quotient: tuple = ()
        if quotient:
            self.quotient = tuple(self.poly(q) if isinstance(q, str) else q for q in quotient)
            for q in self.quotient:
                if not self.compatible(q.ring):
                    raise RingMismatch("quotient generator over a different ring")

    @property
    def local(self) -> bool:
        return not self.order.is_global

    def compatible(self, other: "RingSpec") -> bool:
        """Same ambient polynomial data (quotient not compared)."""
        return (
            self.vars == other.vars
            and self.field == other.field
            and self.order == other.order
        )

    def __eq__(self, other):
        if not isinstance(other, RingSpec):
            return NotImplemented
        return self.compatible(other) and [str(q) for q in self.quotient] == [
            str(q) for q in other.quotient
        ]

    def __hash__(self):
        return hash((self.vars, self.field, repr(self.order), tuple(str(q) for q in self.quotient)))

    # -- element constructors ----------------------------------------------
    @property
    def zero(self) -> Poly:
        return Poly(self, {})

    @property
    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = self.field(c) if isinstance(c, int) else c
        if not c:
            return Poly(self, {})
        return Poly(self, {(0,) * len(self.vars): c})

    def var(self, which) -> Poly:
        i = self.vars.index(which) if isinstance(which, str) else which
        m = [0] * len(self.vars)
        m[i] = 1
        return Poly(self, {tuple(m): self.field.one})

    def monomial(self, exps, coeff=None) -> Poly:
        c = self.field.one if coeff is None else coeff
        if not c:
            return self.zero
        return Poly(self, {tuple(exps): c})

    def poly(self, text: str) -> Poly:
        from .parse import parse_poly

        return parse_poly(self, text)

    def __repr__(self):
        head = f"{self.field}[{','.join(self.vars)}] {self.order!r}"
        if self.quotient:
            head += " / (" + ", ".join(str(q) for q in self.quotient) + ")"
        return head

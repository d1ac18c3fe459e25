"""Monomial orders: global (lex, degrevlex), local (neg-degrevlex) and elimination blocks.

Every order exposes ``key(exps)``; comparing keys with Python's tuple order
gives the monomial order, larger key = larger monomial.
"""

from __future__ import annotations


class MonomialOrder:
    kind = "abstract"

    def key(self, exps):
        raise NotImplementedError

    @property
    def is_global(self) -> bool:
        """True iff 1 is the smallest monomial (Buchberger normal form is safe)."""
        raise NotImplementedError

    @property
    def is_local(self) -> bool:
        """True iff 1 is the largest monomial."""
        raise NotImplementedError

    def compare(self, a, b) -> int:
        if len(a) != len(b):
            raise ValueError("monomial length mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


class Lex(MonomialOrder):
    kind = "lex"
    is_global = True
    is_local = False

    def key(self, exps):
        return exps

    def __repr__(self):
        return "lex"


class DegRevLex(MonomialOrder):
    kind = "degrevlex"
    is_global = True
    is_local = False

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __repr__(self):
        return "degrevlex"


class NegDegRevLex(MonomialOrder):
    """Local order: smaller total degree wins, revlex tie-break."""

    kind = "negdegrevlex"
    is_global = False
    is_local = True

    def key(self, exps):
        return (-sum(exps), tuple(-e for e in reversed(exps)))

    def __repr__(self):
        return "negdegrevlex"


class Block(MonomialOrder):
    """Elimination order: the first ``split`` variables dominate the rest."""

    kind = "block"

    def __init__(self, first: MonomialOrder, rest: MonomialOrder, split: int):
        self.first = first
        self.rest = rest
        self.split = split

    def key(self, exps):
        s = self.split
        return (self.first.key(exps[:s]), self.rest.key(exps[s:]))

    @property
    def is_global(self):
        return self.first.is_global and self.rest.is_global

    @property
    def is_local(self):
        return self.first.is_local and self.rest.is_local

    def __repr__(self):
        return f"block({self.first!r},{self.rest!r},{self.split})"


class Homogenized(MonomialOrder):
    """Global order on monomials with one extra (last) homogenizing variable:
    total degree first, then the base order on the original variables.

    On a homogeneous polynomial the total degrees agree, so the comparison
    reduces to the base order on the dehomogenized terms; this is what makes
    dehomogenized Groebner bases standard bases for the base order."""

    kind = "homogenized"
    is_global = True
    is_local = False

    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, exps):
        return (sum(exps), self.base.key(exps[:-1]))

    def __repr__(self):
        return f"homogenized({self.base!r})"


LEX = Lex()
DEGREVLEX = DegRevLex()
NEGDEGREVLEX = NegDegRevLex()

ORDERS = {"lex": LEX, "degrevlex": DEGREVLEX, "negdegrevlex": NEGDEGREVLEX}

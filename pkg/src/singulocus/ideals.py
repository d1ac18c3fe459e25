"""Ideal arithmetic: sum, product, intersection, quotient, saturation,
elimination, and radical membership/equality (bounded-power in local rings)."""

from __future__ import annotations

from .basis import (
    normal_form_poly,
    reduce_mod_q,
    std_basis_polys,
)
from .config import LIMITS
from .orders import DEGREVLEX, LEX, Block
from .ring import Poly, RingMismatch, RingSpec


class Undetermined:
    """Result of a bounded decision procedure that ran out of budget."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDETERMINED"

    def __bool__(self):
        raise TypeError("undetermined result used as a boolean; check identity instead")


UNDETERMINED = Undetermined()


def _canonical_gens(ring: RingSpec, polys):
    """Reduce mod Q, drop zeros, make monic, dedupe, sort deterministically.

    In a local ring a generator whose lead monomial divides every one of its
    terms is that monomial times a unit, and is replaced by the monomial.
    """
    local = ring.order.is_local
    out = []
    for p in polys:
        p = reduce_mod_q(p)
        if p.is_zero():
            continue
        if p.is_unit():
            return [ring.one]
        if local and len(p.terms) > 1:
            lm = p.lead_monomial()
            if all(all(a <= b for a, b in zip(lm, m)) for m in p.terms):
                p = Poly(ring, {lm: ring.field.one})
        p = p.monic()
        if p not in out:
            out.append(p)
    out.sort(key=lambda p: (p.total_degree(), ring.order.key(p.lead_monomial()), str(p)))
    return out


def trim_gens(ring: RingSpec, polys):
    """Drop generators that lie in the ideal of the remaining ones.

    Elimination-style constructions (colon, quotient) return generating sets
    where a few small elements make the rest redundant; keeping only the
    irredundant ones keeps canonical output and later bases small.  Candidates
    are tried smallest first (fewest terms, lowest degree).
    """
    cleaned = _canonical_gens(ring, [ring.poly(p) if isinstance(p, str) else p for p in polys])
    if len(cleaned) <= 1:
        return cleaned
    cleaned.sort(key=lambda p: (len(p.terms), p.total_degree(), str(p)))
    kept: list = []
    current = None
    for p in cleaned:
        if kept:
            if current is None:
                current = Ideal(ring, kept)
            if current.contains(p):
                continue
        kept.append(p)
        current = None
    return kept


class Ideal:
    """Finitely generated ideal of R = k[x]/Q (localized when the order is local)."""

    def __init__(self, ring: RingSpec, gens=()):
        self.ring = ring
        self.gens = tuple(
            _canonical_gens(ring, [ring.poly(g) if isinstance(g, str) else g for g in gens])
        )
        for g in self.gens:
            if not ring.compatible(g.ring):
                raise RingMismatch("generator over a different ring")
        self._std = None
        self._trunc = None

    @property
    def std(self):
        if self._std is None:
            self._std = std_basis_polys(list(self.gens), self.ring)
        return self._std

    def normal_form(self, f: Poly) -> Poly:
        return normal_form_poly(f, self.std, self.ring)

    def contains(self, f: Poly) -> bool:
        from .basis import ModuleKey, normal_form_vec, trunc_map_of, vec_of_poly

        basis = [vec_of_poly(p) for p in self.std]
        if self._trunc is None:
            self._trunc = (trunc_map_of(basis, self.ring), )
        nf = normal_form_vec(
            vec_of_poly(f),
            basis,
            self.ring,
            ModuleKey(self.ring),
            scale_free=True,
            trunc=self._trunc[0],
        )
        return not nf

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        """Equality by mutual membership of generators (basis-independent)."""
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_zero(self) -> bool:
        return not self.gens

    def is_whole_ring(self) -> bool:
        return any(g.is_unit() for g in self.gens) or self.contains(self.ring.one)

    def __repr__(self):
        return "ideal(" + ", ".join(str(g) for g in self.gens) + ")"


# ---------------------------------------------------------------------------
# ring extension plumbing (tag variables for intersection / radical / elimination)


_TAG = "@t"


def _extended_ring(ring: RingSpec, count: int = 1) -> RingSpec:
    """Prepend ``count`` tag variables, greatest in an elimination block order."""
    newvars = tuple(f"{_TAG}{i}" for i in range(count)) + ring.vars
    order = Block(LEX if count == 1 else DEGREVLEX, ring.order, count)
    ext = RingSpec(newvars, order, ring.field)
    if ring.quotient:
        ext = RingSpec(newvars, order, ring.field, [_lift(q, ext, count) for q in ring.quotient])
    return ext


def _lift(p: Poly, ext: RingSpec, count: int) -> Poly:
    return Poly(ext, {(0,) * count + m: c for m, c in p.terms.items()})


def _drop(p: Poly, base: RingSpec, count: int) -> Poly:
    return Poly(base, {m[count:]: c for m, c in p.terms.items()})


def _tag_free(p: Poly, count: int) -> bool:
    return all(all(e == 0 for e in m[:count]) for m in p.terms)


# ---------------------------------------------------------------------------
# operations


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J by the tag-variable trick: eliminate t from <t*I, (1-t)*J>."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_whole_ring():
        return J
    if J.is_whole_ring():
        return I
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    ext = _extended_ring(ring)
    t = ext.var(0)
    # std-basis generators are minimal and interreduced, which keeps the
    # tag-variable elimination small
    gens = [t * _lift(f, ext, 1) for f in I.std]
    gens += [(ext.one - t) * _lift(g, ext, 1) for g in J.std]
    basis = std_basis_polys(gens, ext, tail_pred=lambda lead: lead[1][0] == 0)
    kept = [_drop(p, ring, 1) for p in basis if _tag_free(p, 1)]
    return Ideal(ring, kept)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """I : J = {f : f*J <= I}; J = (0) gives R by the annihilator convention.

    One elimination over k = #gens(J) components: I is copied into every
    component, the generators of J are stacked into one column with a payload
    slot, and the purely-payload vectors are the multipliers f with f*J in I.
    """
    _same_ring(I, J)
    ring = I.ring
    if J.is_zero():
        return Ideal(ring, [ring.one])
    from .basis import std_basis_vecs

    k = len(J.gens)
    zero_m = (0,) * len(ring.vars)
    cols = []
    for f in I.gens:
        for c in range(k):
            cols.append({(c, m): coeff for m, coeff in f.terms.items()})
    stacked = {}
    for c, g in enumerate(J.gens):
        for m, coeff in g.terms.items():
            stacked[(c, m)] = coeff
    stacked[(k, zero_m)] = ring.field.one
    cols.append(stacked)
    for q in ring.quotient:
        for c in range(k):
            cols.append({(c, m): coeff for m, coeff in q.terms.items()})
    basis = std_basis_vecs(cols, ring, split=k, tail_pred=lambda lead: lead[0] >= k)
    raw = Ideal(
        ring,
        [
            Poly(ring, {m: c for (_, m), c in w.items()})
            for w in basis
            if all(comp >= k for (comp, _) in w)
        ],
    )
    if raw.is_zero():
        return raw
    return Ideal(ring, trim_gens(ring, raw.std))


def saturation(I: Ideal, J: Ideal) -> Ideal:
    """Stable value of iterated colon I : J : J : ... (finite by Noetherianity)."""
    _same_ring(I, J)
    K = I
    while True:
        K2 = ideal_quotient(K, J)
        # K <= K:J always; with the inclusion known, equal lead staircases force
        # equality: reducing an element of the larger ideal against the basis of
        # the smaller one can then never reach an irreducible lead
        if _lead_monomials(K2) == _lead_monomials(K):
            return K
        K = K2


def _lead_monomials(I: Ideal):
    return sorted(p.lead_monomial() for p in I.std)


def eliminate(I: Ideal, varnames) -> Ideal:
    """Generators of I cap k[vars not in varnames]."""
    ring = I.ring
    drop = tuple(varnames)
    for v in drop:
        if v not in ring.vars:
            raise ValueError(f"unknown variable {v!r}")
    if not drop:
        return I
    keep = tuple(v for v in ring.vars if v not in drop)
    perm = [ring.vars.index(v) for v in drop + keep]
    k = len(drop)
    order = Block(DEGREVLEX, ring.order, k) if keep else DEGREVLEX
    # reorder both variables and quotient generators into the permuted ring
    def permute(p: Poly, target: RingSpec) -> Poly:
        return Poly(target, {tuple(m[i] for i in perm) : c for m, c in p.terms.items()})

    # the base order must act on the kept variables in their original relative order
    ext = RingSpec(drop + keep, order, ring.field)
    if ring.quotient:
        ext = RingSpec(drop + keep, order, ring.field, [permute(q, ext) for q in ring.quotient])
    basis = std_basis_polys(
        [permute(g, ext) for g in I.gens],
        ext,
        tail_pred=lambda lead: all(e == 0 for e in lead[1][:k]),
    )
    kept_polys = []
    inv = {v: i for i, v in enumerate(drop + keep)}
    for p in basis:
        if _tag_free(p, k):
            terms = {}
            for m, c in p.terms.items():
                back = [0] * len(ring.vars)
                for pos, e in enumerate(m[k:]):
                    back[ring.vars.index(keep[pos])] = e
                terms[tuple(back)] = c
            kept_polys.append(Poly(ring, terms))
    return Ideal(ring, kept_polys)


def radical_member(f: Poly, I: Ideal):
    """f in sqrt(I)?  Global: exact (Rabinowitsch).  Local: bounded power test,
    returning UNDETERMINED when no power up to the bound lands in I."""
    ring = I.ring
    f = reduce_mod_q(f)
    if f.is_zero() or I.contains(f):
        return True
    if I.is_zero() and not ring.quotient:
        return False
    if ring.order.is_global:
        ext = _extended_ring(ring)
        t = ext.var(0)
        gens = [_lift(g, ext, 1) for g in I.gens]
        gens.append(ext.one - t * _lift(f, ext, 1))
        basis = std_basis_polys(gens, ext)
        return any(p.is_unit() for p in basis)
    power = f
    for _ in range(2, LIMITS.power_bound + 1):
        power = reduce_mod_q(power * f)
        if power.is_zero() or I.contains(power):
            return True
    return UNDETERMINED


class RadicalReport:
    """Generator-wise radical comparison of two ideals."""

    def __init__(self, forward, backward):
        self.forward = forward  # results for gens(I) in sqrt(J)
        self.backward = backward

    @property
    def equal(self):
        results = self.forward + self.backward
        if any(r is False for r in results):
            return False
        if any(r is UNDETERMINED for r in results):
            return UNDETERMINED
        return True

    def __repr__(self):
        return f"radical_equal={self.equal!r}"


def radical_equal(I: Ideal, J: Ideal) -> RadicalReport:
    _same_ring(I, J)
    return RadicalReport(
        [radical_member(g, J) for g in I.gens],
        [radical_member(g, I) for g in J.gens],
    )


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatch("ideals over different rings")

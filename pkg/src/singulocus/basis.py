"""Standard-basis engine for ideals and submodules of R^m.

Internal vector format: ``{(component, monomial): coefficient}``.  Ideals are the
rank-1 case with component 0.  Global orders run Buchberger with full reduction.
Non-global orders complete bases by homogenizing and running the global engine,
and decide membership with Mora's weak normal form with ecart selection, which
is exact for the localized ring.
"""

from __future__ import annotations

import heapq
from math import comb

from .config import LIMITS, DegreeOverflow
from .ring import Poly, RingSpec

# ---------------------------------------------------------------------------
# vectors


def vec_of_polys(polys) -> dict:
    """Pack a tuple of Poly into one vector, component i <- polys[i]."""
    v = {}
    for comp, p in enumerate(polys):
        for m, c in p.terms.items():
            v[(comp, m)] = c
    return v

def vec_of_poly(p: Poly) -> dict:
    return {(0, m): c for m, c in p.terms.items()}


def vec_to_polys(v: dict, ring: RingSpec, rank: int):
    parts = [dict() for _ in range(rank)]
    for (comp, m), c in v.items():
        parts[comp][m] = c
    return tuple(Poly(ring, t) for t in parts)


def vec_to_poly(v: dict, ring: RingSpec) -> Poly:
    return Poly(ring, {m: c for (_, m), c in v.items()})


def vec_add_scaled(v: dict, w: dict, mono, coeff) -> dict:
    """v + coeff * x^mono * w, in place on a copy of v."""
    out = dict(v)
    for (comp, m), c in w.items():
        key = (comp, tuple(a + b for a, b in zip(m, mono)))
        s = out.get(key)
        s = coeff * c if s is None else s + coeff * c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def vec_degree(v: dict) -> int:
    return max((sum(m) for (_, m) in v), default=0)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# degree truncation for local orders
#
# Over a local degree order, if the lead monomials of known module elements
# (all supported in one fixed component) cover every monomial of some total
# degree D, then the module contains m^D times that component, so any term of
# degree >= D in that component may be dropped during reductions: dropping it
# only changes the vector by a module element.  This bounds the otherwise
# unbounded series expansions of local normal forms.


def _monos_of_degree(d: int, n: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _monos_of_degree(d - first, n - 1):
            yield (first,) + rest


def _cover_degree(monos, nvars: int, work_limit: int = 20000):
    """Smallest d with every degree-d monomial divisible by one of ``monos``.

    Returns None when no such d exists (some variable has no pure-power
    multiple among the monomials).
    """
    pure = [None] * nvars
    for m in monos:
        nz = [i for i, e in enumerate(m) if e]
        if not nz:
            return 0
        if len(nz) == 1:
            i = nz[0]
            if pure[i] is None or m[i] < pure[i]:
                pure[i] = m[i]
    if any(p is None for p in pure):
        return None
    # every monomial of this degree has some exponent reaching a pure power
    bound = sum(p - 1 for p in pure) + 1
    start = min(sum(m) for m in monos)
    for d in range(start, bound):
        if comb(d + nvars - 1, nvars - 1) > work_limit:
            break
        if all(
            any(_divides(g, mono) for g in monos) for mono in _monos_of_degree(d, nvars)
        ):
            return d
    return bound


def _corner_bound(leads, comps, nvars: int):
    """Uniform tail-truncation map from the lead staircases, or None.

    If in every component carrying terms the leads cover a whole degree level,
    then a vector all of whose terms lie strictly above the largest covered
    level reduces to zero against the basis: every lead met during a weak
    normal form stays divisible, and a weak normal form with no irreducible
    lead is zero.  Terms at or above the returned per-component bound are
    therefore module members and may be dropped.
    """
    by_comp: dict = {}
    for c, m in leads:
        by_comp.setdefault(c, []).append(m)
    worst = 0
    for c in comps:
        monos = by_comp.get(c)
        if not monos:
            return None
        d = _cover_degree(monos, nvars)
        if d is None:
            return None
        worst = max(worst, d)
    return {c: worst + 1 for c in comps}


def _truncate_vec(v: dict, trunc) -> dict:
    if not trunc:
        return v
    out = {}
    for t, c in v.items():
        bound = trunc.get(t[0])
        if bound is None or sum(t[1]) < bound:
            out[t] = c
    return out if len(out) != len(v) else v


def trunc_map_of(basis_vecs, ring: RingSpec, mkey=None):
    """Per-component truncation degrees certified by a basis (local orders only)."""
    if not ring.order.is_local:
        return None
    if mkey is None:
        mkey = ModuleKey(ring)
    by_comp: dict = {}
    for g in basis_vecs:
        if not g:
            continue
        comps = {c for (c, _) in g}
        if len(comps) == 1:
            by_comp.setdefault(comps.pop(), []).append(vec_lead(g, mkey)[1])
    out = {}
    for c, monos in by_comp.items():
        d = _cover_degree(monos, len(ring.vars))
        if d is not None:
            out[c] = d + 1
    return out or None


# ---------------------------------------------------------------------------
# module orders


class ModuleKey:
    """Order on (component, monomial) pairs extending the ring order.

    With ``split`` set, terms in components < split dominate all others: a basis
    element with lead component >= split has all its support there, which is the
    elimination step behind syzygy and intersection computations.
    """

    def __init__(self, ring: RingSpec, split=None):
        self.ringkey = ring.order.key
        self.split = split

    def __call__(self, key):
        comp, m = key
        if self.split is None:
            return (self.ringkey(m), -comp)
        return (1 if comp < self.split else 0, self.ringkey(m), -comp)


def vec_lead(v: dict, mkey: ModuleKey):
    return max(v, key=mkey)


# ---------------------------------------------------------------------------
# normal forms


class _Rev:
    """Heap entry wrapper turning heapq's min-heap into a max-heap on keys."""

    __slots__ = ("k", "t")

    def __init__(self, k, t):
        self.k = k
        self.t = t

    def __lt__(self, other):
        return self.k > other.k


class _VecAcc:
    """Working vector for normal-form loops.

    Keeps the coefficient dict together with a lazy max-heap of term keys and a
    lazy max-heap of total degrees, so finding the lead term and the degree is
    amortized O(log n) and a reduction step costs O(|reducer|) instead of
    O(|vector|).
    """

    __slots__ = ("d", "heap", "degcount", "degheap", "mkey", "trunc")

    def __init__(self, v: dict, mkey: ModuleKey, trunc=None):
        self.mkey = mkey
        self.trunc = trunc
        if trunc:
            v = _truncate_vec(v, trunc)
        self.d = {t: c for t, c in v.items() if c}
        self.heap = [_Rev(mkey(t), t) for t in self.d]
        heapq.heapify(self.heap)
        self.degcount = {}
        for (_, m) in self.d:
            s = sum(m)
            self.degcount[s] = self.degcount.get(s, 0) + 1
        self.degheap = [-s for s in self.degcount]
        heapq.heapify(self.degheap)

    def lead(self):
        d, heap = self.d, self.heap
        while heap:
            t = heap[0].t
            if t in d:
                return t
            heapq.heappop(heap)
        return None

    def degree(self) -> int:
        dh, dc = self.degheap, self.degcount
        while dh:
            s = -dh[0]
            if dc.get(s, 0) > 0:
                return s
            heapq.heappop(dh)
        return 0

    def add_scaled(self, w: dict, mono, coeff):
        """self += coeff * x^mono * w."""
        d, mkey, dc = self.d, self.mkey, self.degcount
        tr = self.trunc
        for (comp, m), c in w.items():
            nm = tuple(a + b for a, b in zip(m, mono))
            if tr is not None:
                bound = tr.get(comp)
                if bound is not None and sum(nm) >= bound:
                    continue
            t = (comp, nm)
            old = d.get(t)
            if old is None:
                nv = coeff * c
                if nv:
                    d[t] = nv
                    heapq.heappush(self.heap, _Rev(mkey(t), t))
                    s = sum(nm)
                    dc[s] = dc.get(s, 0) + 1
                    heapq.heappush(self.degheap, -s)
            else:
                nv = old + coeff * c
                if nv:
                    d[t] = nv
                else:
                    del d[t]
                    dc[sum(nm)] -= 1

    def snapshot(self) -> dict:
        return dict(self.d)

    def prune(self):
        """Re-apply the truncation map after it tightened mid-reduction."""
        tr = self.trunc
        if not tr:
            return
        drop = []
        for (comp, m) in self.d:
            bound = tr.get(comp)
            if bound is not None and sum(m) >= bound:
                drop.append((comp, m))
        for t in drop:
            del self.d[t]
            self.degcount[sum(t[1])] -= 1

    def max_coeff_bits(self) -> int:
        first = next(iter(self.d.values()), None)
        if first is None or not hasattr(first, "numerator"):
            return 0
        return max(abs(c.numerator).bit_length() for c in self.d.values())

    def rescale_primitive(self):
        """Multiply by the rational making all coefficients coprime integers."""
        s = _primitive_scale(self.d.values())
        if s is not None:
            d = self.d
            for t in d:
                d[t] *= s


try:
    from gmpy2 import gcd as _gcd, lcm as _lcm
except ImportError:  # pragma: no cover - fallback arithmetic backend
    from math import gcd as _gcd, lcm as _lcm


def _primitive_scale(coeffs):
    """Scalar s with {s*c} coprime integers, or None if not worthwhile."""
    coeffs = list(coeffs)
    if not coeffs or not hasattr(coeffs[0], "numerator"):
        return None
    num_g, den_l = 0, 1
    for c in coeffs:
        num_g = _gcd(num_g, c.numerator)
        den_l = _lcm(den_l, c.denominator)
    if num_g == 0 or (num_g == 1 and den_l == 1):
        return None
    first = coeffs[0]
    return type(first)(den_l) / type(first)(num_g)


def _primitive_vec(v: dict) -> dict:
    s = _primitive_scale(list(v.values()))
    if s is None:
        return v
    return {t: c * s for t, c in v.items()}


def nf_global(v: dict, basis, mkey: ModuleKey) -> dict:
    """Full normal form (tail included) for global orders."""
    acc = _VecAcc(v, mkey)
    result = {}
    while True:
        lead = acc.lead()
        if lead is None:
            return result
        comp, m = lead
        hit = False
        for g, (gc, gm), glc in basis:
            if gc == comp and _divides(gm, m):
                factor = tuple(a - b for a, b in zip(m, gm))
                acc.add_scaled(g, factor, -(acc.d[lead] / glc))
                hit = True
                break
        if not hit:
            result[lead] = acc.d.pop(lead)
            acc.degcount[sum(m)] -= 1


def nf_mora(
    v: dict, basis, mkey: ModuleKey, scale_free: bool = False, trunc=None, on_snapshot=None
) -> dict:
    """Mora weak normal form: head reduction with ecart selection.

    Contract: u*f = sum a_i g_i + NF(f) for some unit u with constant term 1;
    NF(f) = 0 iff f lies in the localized module generated by the basis.
    With ``scale_free`` the result is only determined up to a nonzero constant;
    the working vector is then periodically rescaled to coprime integer
    coefficients to keep rational arithmetic cheap.

    ``on_snapshot`` (only sound when the input is known to lie in the module):
    called with each intermediate vector added to the reducer pool, which is a
    module member whenever the input is; lets the caller tighten the live
    ``trunc`` map mid-reduction, after which the working vector is re-pruned.
    """
    # reducers may be replaced by any constant multiple without changing the
    # normal form, so store them with primitive integer coefficients
    pool = []
    for (g, lt, _) in basis:
        gp = _primitive_vec(g)
        pool.append((gp, lt, gp[lt], vec_degree(gp) - sum(lt[1])))
    acc = _VecAcc(v, mkey, trunc)
    steps = 0
    while True:
        lead = acc.lead()
        if lead is None:
            return {}
        comp, m = lead
        best = None  # (g, lead, lc, ecart, (ecart, |g|, idx))
        for idx, entry in enumerate(pool):
            gc, gm = entry[1]
            if gc == comp and _divides(gm, m):
                rk = (entry[3], len(entry[0]), idx)
                if best is None or rk < best[4]:
                    best = (entry[0], entry[1], entry[2], entry[3], rk)
        if best is None:
            return acc.snapshot()
        g, (_, gm), glc, e_g, _ = best
        e_h = acc.degree() - sum(m)
        if e_g > e_h:
            vl = _primitive_vec(acc.snapshot())
            pool.append((vl, lead, vl[lead], e_h))
            if on_snapshot is not None and on_snapshot(vl, lead):
                acc.prune()
        factor = tuple(a - b for a, b in zip(m, gm))
        acc.add_scaled(g, factor, -(acc.d[lead] / glc))
        steps += 1
        if scale_free and steps % 16 == 0 and acc.max_coeff_bits() > 256:
            acc.rescale_primitive()


def normal_form_vec(
    v: dict,
    basis_vecs,
    ring: RingSpec,
    mkey: ModuleKey,
    scale_free: bool = False,
    trunc=None,
    on_snapshot=None,
) -> dict:
    basis = []
    for g in basis_vecs:
        if g:
            lt = vec_lead(g, mkey)
            basis.append((g, lt, g[lt]))
    if ring.order.is_global:
        return nf_global(v, basis, mkey)
    return nf_mora(v, basis, mkey, scale_free=scale_free, trunc=trunc, on_snapshot=on_snapshot)


# ---------------------------------------------------------------------------
# Buchberger / Mora basis completion


def _vec_sort_key(v: dict, mkey: ModuleKey):
    return (
        vec_degree(v),
        [(mkey(k), str(c)) for k, c in sorted(v.items(), key=lambda kv: mkey(kv[0]), reverse=True)],
    )


def _monic_vec(v: dict, mkey: ModuleKey) -> dict:
    lc = v[vec_lead(v, mkey)]
    if lc == 1:
        return v
    return {k: c / lc for k, c in v.items()}


_HVAR = "@h"


def _homogenize_vec(v: dict) -> dict:
    """Pad every term with a power of the (last) homogenizing variable."""
    d = vec_degree(v)
    return {(c, m + (d - sum(m),)): coeff for (c, m), coeff in v.items()}


def _dehomogenize_vec(v: dict) -> dict:
    out: dict = {}
    for (c, m), coeff in v.items():
        key = (c, m[:-1])
        s = out.get(key)
        s = coeff if s is None else s + coeff
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _std_via_homogenization(gens, ring: RingSpec, split=None, tail_pred=None):
    """Standard basis for a non-global order, via homogenization.

    Homogenize the generators with one extra last variable and compute the
    reduced Groebner basis for the global order refining total degree by the
    base order.  On homogeneous vectors that order agrees term-by-term with the
    base order after setting the extra variable to 1, and every module element
    lifts into the homogenized module up to a power of the extra variable, so
    the dehomogenized basis is a standard basis for the base order.  This
    terminates unconditionally and, with full reduction, avoids the deep
    reduction walks and coefficient swell of direct local normal forms.
    """
    from .orders import Homogenized

    hring = RingSpec(ring.vars + (_HVAR,), Homogenized(ring.order), ring.field)
    hbasis = std_basis_vecs(
        [_homogenize_vec(v) for v in gens if v], hring, split=split, tail_pred=tail_pred
    )
    mkey = ModuleKey(ring, split)
    main, tail = [], []
    for hv in hbasis:
        v = _dehomogenize_vec(hv)
        if not v:
            continue
        v = _monic_vec(v, mkey)
        lead = vec_lead(v, mkey)
        if tail_pred is not None and tail_pred(lead):
            if v not in tail:
                tail.append(v)
        else:
            main.append((v, lead))
    rank1 = all(c == 0 for v, _ in main for (c, _) in v) and all(
        c == 0 for v in tail for (c, _) in v
    )
    if rank1 and any(sum(lead[1]) == 0 for _, lead in main):
        return [{(0, (0,) * len(ring.vars)): ring.field.one}]
    # minimalize the standard-basis part (distinct homogenized leads can share
    # a dehomogenized lead); the tail part is a generating set and stays whole
    keep = []
    for i, (v, (ci, mi)) in enumerate(main):
        redundant = False
        for j, (_, (cj, mj)) in enumerate(main):
            if j != i and cj == ci and _divides(mj, mi) and (mj != mi or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(v)
    bound = _corner_bound(
        [lead for _, lead in main] + [vec_lead(v, mkey) for v in tail],
        {c for v in keep + tail for (c, _) in v},
        len(ring.vars),
    )
    if bound is not None:
        # minimal leads sit at or below the covered level, so the basis part
        # keeps its leads; a wholly-truncated tail vector was redundant
        keep = [_monic_vec(_truncate_vec(v, bound), mkey) for v in keep]
        tail = [
            _monic_vec(w, mkey) for w in (_truncate_vec(v, bound) for v in tail) if w
        ]
    keep.sort(key=lambda v: _vec_sort_key(v, mkey))
    tail.sort(key=lambda v: _vec_sort_key(v, mkey))
    return keep + tail


def std_basis_vecs(gens, ring: RingSpec, split=None, tail_pred=None):
    """Complete generating vectors to a standard basis (list of vectors).

    Global order: unique reduced Groebner basis, monic, sorted.
    Other orders: standard basis via homogenization, minimal (pairwise
    non-divisible leads), monic.

    ``tail_pred`` marks lead terms lying in an elimination tail (terms there are
    dominated by every other term, so a tail lead means the whole vector lives
    in the tail).  Tail vectors are collected as generators of the tail part
    without completing S-pairs among them: any such S-pair stays inside the
    span of the tail vectors already found, so this loses no generators and
    skips the most expensive reductions.  With ``tail_pred`` the returned tail
    part is a generating set, not a full standard basis.
    """
    if not ring.order.is_global:
        return _std_via_homogenization(gens, ring, split=split, tail_pred=tail_pred)
    mkey = ModuleKey(ring, split)
    cap = LIMITS.degree_cap
    G = []
    collected = []
    for v in gens:
        if v:
            d = vec_degree(v)
            if d > cap:
                raise DegreeOverflow(d, cap)
            v = _monic_vec(v, mkey)
            if tail_pred is not None and tail_pred(vec_lead(v, mkey)):
                collected.append(v)
            else:
                G.append(v)
    G.sort(key=lambda v: _vec_sort_key(v, mkey))
    # drop duplicates
    dedup = []
    for v in G:
        if v not in dedup:
            dedup.append(v)
    G = dedup
    if not G:
        return collected
    rank1 = all(comp == 0 for v in G for (comp, _) in v)
    nvars = len(ring.vars)

    def unit_lead(v):
        # lead term 1 in component 0 => the whole module collapses only in rank 1
        lead = vec_lead(v, mkey)
        return rank1 and sum(lead[1]) == 0

    for v in G:
        if unit_lead(v):
            return [{(0, (0,) * nvars): ring.field.one}]

    leads = [vec_lead(v, mkey) for v in G]

    def pair_key(p):
        i, j = p
        (c, mi), (_, mj) = leads[i], leads[j]
        lcm = tuple(max(a, b) for a, b in zip(mi, mj))
        return (sum(lcm), mkey((c, lcm)), j, i)

    # active pairs live in the set; the heap orders them (lazy deletion)
    pairs = {(i, j) for i in range(len(G)) for j in range(i) if leads[i][0] == leads[j][0]}
    pair_heap = [(pair_key(p), p) for p in pairs]
    heapq.heapify(pair_heap)

    def _chain_skip(i, j, c, lcm):
        # triangle criterion: S(i,j) is a lead-term combination of S(i,k) and
        # S(j,k) once both of those have already been handled
        for k in range(len(G)):
            if k == i or k == j:
                continue
            ck, mk = leads[k]
            if ck != c or not _divides(mk, lcm):
                continue
            pik = (max(i, k), min(i, k))
            pjk = (max(j, k), min(j, k))
            if pik not in pairs and pjk not in pairs:
                return True
        return False

    while pairs:
        _, (i, j) = heapq.heappop(pair_heap)
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        (c, mi), (_, mj) = leads[i], leads[j]
        lcm = tuple(max(a, b) for a, b in zip(mi, mj))
        if rank1 and lcm == tuple(a + b for a, b in zip(mi, mj)):
            continue  # product criterion (coprime leads), valid for polynomial ideals
        if _chain_skip(i, j, c, lcm):
            continue
        fi = tuple(a - b for a, b in zip(lcm, mi))
        fj = tuple(a - b for a, b in zip(lcm, mj))
        s = vec_add_scaled(
            vec_add_scaled({}, G[i], fi, ring.field.one), G[j], fj, -ring.field.one
        )
        r = normal_form_vec(s, G, ring, mkey)
        if not r:
            continue
        d = vec_degree(r)
        if d > cap:
            raise DegreeOverflow(d, cap)
        r = _monic_vec(r, mkey)
        if unit_lead(r):
            return [{(0, (0,) * nvars): ring.field.one}]
        rl = vec_lead(r, mkey)
        if tail_pred is not None and tail_pred(rl):
            if r not in collected:
                collected.append(r)
            continue
        G.append(r)
        leads.append(rl)
        k = len(G) - 1
        for t in range(k):
            if leads[t][0] == leads[k][0]:
                p = (k, t)
                pairs.add(p)
                heapq.heappush(pair_heap, (pair_key(p), p))

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i, v in enumerate(G):
        ci, mi = leads[i]
        redundant = False
        for j in range(len(G)):
            if j == i:
                continue
            cj, mj = leads[j]
            if cj == ci and _divides(mj, mi):
                if mj != mi or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(v)
    G = keep
    # interreduce tails -> the unique reduced Groebner basis
    reduced = []
    for i, v in enumerate(G):
        others = G[:i] + G[i + 1 :]
        basis = [(g, vec_lead(g, mkey), g[vec_lead(g, mkey)]) for g in others]
        reduced.append(_monic_vec(nf_global(v, basis, mkey), mkey))
    G = reduced
    G.sort(key=lambda v: _vec_sort_key(v, mkey))
    if collected:
        collected.sort(key=lambda v: _vec_sort_key(v, mkey))
        G = G + collected
    return G


# ---------------------------------------------------------------------------
# polynomial-level convenience (rank 1)


def std_basis_polys(polys, ring: RingSpec, tail_pred=None):
    """Standard basis of the ideal generated by ``polys`` + the ring's quotient."""
    gens = [vec_of_poly(p) for p in polys] + [vec_of_poly(q) for q in ring.quotient]
    return [vec_to_poly(v, ring) for v in std_basis_vecs(gens, ring, tail_pred=tail_pred)]


def normal_form_poly(f: Poly, basis_polys, ring: RingSpec) -> Poly:
    mkey = ModuleKey(ring)
    v = normal_form_vec(
        vec_of_poly(f), [vec_of_poly(p) for p in basis_polys if not p.is_zero()], ring, mkey
    )
    return vec_to_poly(v, ring)


_Q_STD_CACHE: dict = {}


def quotient_std(ring: RingSpec):
    """Cached standard basis of the ring's quotient ideal Q."""
    key = ring
    got = _Q_STD_CACHE.get(key)
    if got is None:
        got = std_basis_polys([], ring) if ring.quotient else []
        _Q_STD_CACHE[key] = got
    return got


def reduce_mod_q(f: Poly) -> Poly:
    """Q-normal form of a polynomial (identity when the ring has no quotient)."""
    ring = f.ring
    if not ring.quotient:
        return f
    return normal_form_poly(f, quotient_std(ring), ring)


# ---------------------------------------------------------------------------
# syzygies


def syzygies_of_columns(cols, ring: RingSpec, rank: int, with_quotient: bool = True):
    """Generators of { c in R^n : sum c_j * cols[j] = 0 in (R/Q)^rank }.

    ``cols`` is a list of rank-tuples of Poly.  Works by a standard-basis
    computation in R^(rank+n) eliminating the first ``rank`` components: basis
    elements supported entirely in the trailing block are the syzygies.
    """
    n = len(cols)
    gens = []
    one = ring.field.one
    zero_m = (0,) * len(ring.vars)
    for j, col in enumerate(cols):
        v = vec_of_polys(col)
        v[(rank + j, zero_m)] = one
        gens.append(v)
    if with_quotient:
        for q in ring.quotient:
            for i in range(rank):
                v = {(i, m): c for m, c in q.terms.items()}
                gens.append(v)
    basis = std_basis_vecs(gens, ring, split=rank)
    out = []
    for v in basis:
        if all(comp >= rank for (comp, _) in v):
            shifted = {(comp - rank, m): c for (comp, m), c in v.items()}
            out.append(vec_to_polys(shifted, ring, n))
    return out

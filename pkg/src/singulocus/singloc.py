"""Essential singular locus Sing_r(J), Pfaffian ideals of skew matrices, and
Fitting ideals of the differentials presentation."""

from __future__ import annotations

from itertools import combinations

from .derivations import DerBasis, apply_der, der_module, der_module_m
from .ideals import Ideal, ideal_sum, trim_gens
from .matrices import RMat, ann_coker_j, det_ideal
from .ring import RingSpec


def sing_request_matrix(J: Ideal, ders: DerBasis) -> RMat:
    """Presentation matrix behind Sing_r: N diagonal generator blocks, then one
    column of derivatives (D f_1, ..., D f_N) per derivation generator."""
    ring = J.ring
    fs = J.gens
    N = len(fs)
    rows = [[] for _ in range(N)]
    for blk in range(N):  # block index = which row carries the generator row
        for f in fs:
            for r in range(N):
                rows[r].append(f if r == blk else ring.zero)
    for D in ders.gens:
        col = [apply_der(D, f) for f in fs]
        for r in range(N):
            rows[r].append(col[r])
    return RMat(ring, rows)


def sing_locus(J: Ideal, r: int, variant: str = "full") -> Ideal:
    """Ann_r of R^N / (J*R^N + Der(f)-columns); returns J itself when r > N."""
    if r < 1:
        raise ValueError("expected grade r must be >= 1")
    ring = J.ring
    # the construction does not depend on the generating set, and every block
    # size below grows combinatorially in N, so present J minimally first
    if len(J.gens) > 1:
        J = Ideal(ring, trim_gens(ring, list(J.gens)))
    N = len(J.gens)
    if r > N:
        return J
    ders = der_module_m(ring) if variant == "into-maximal" else der_module(ring)
    M = sing_request_matrix(J, ders)
    return ann_coker_j(M, r)


# ---------------------------------------------------------------------------
# Pfaffians


def _pfaffian(A: RMat, idx, cache):
    if not idx:
        return A.ring.one
    got = cache.get(idx)
    if got is not None:
        return got
    i0 = idx[0]
    rest = idx[1:]
    total = A.ring.zero
    for s, js in enumerate(rest):
        e = A.entry(i0, js)
        if not e.is_zero():
            sub = _pfaffian(A, rest[:s] + rest[s + 1 :], cache)
            total = total + ((-1) ** s) * e * sub
    cache[idx] = total
    return total


def pfaffian(A: RMat) -> "Poly":
    if not A.is_skew():
        raise ValueError("Pfaffian requires a skew-symmetric matrix")
    if A.m % 2:
        return A.ring.zero
    return _pfaffian(A, tuple(range(A.m)), {})


def pfaffian_ideal(A: RMat, j: int) -> Ideal:
    """Ideal of Pfaffians of all principal j x j submatrices (j even)."""
    if not A.is_skew():
        raise ValueError("Pfaffian ideal requires a skew-symmetric matrix")
    if j % 2:
        raise ValueError("Pfaffian size must be even")
    ring = A.ring
    if j < 0:
        raise ValueError("Pfaffian size must be non-negative")
    if j == 0:
        return Ideal(ring, [ring.one])
    if j > A.m:
        return Ideal(ring, [])
    cache: dict = {}
    gens = [_pfaffian(A, S, cache) for S in combinations(range(A.m), j)]
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# Fitting ideals of the differentials presentation


def fitt_omega(ring: RingSpec, J: Ideal, k: int) -> Ideal:
    """Fitt_k of the module of differentials of (k[x]/Q)/J: the presentation has
    rows dx_1..dx_p and columns d(g)/dx_i for combined generators g, together
    with J-multiple relations; result is I_{p-k} of it plus J."""
    p = len(ring.vars)
    combined = list(ring.quotient) + list(J.gens)
    cols = []
    for g in combined:
        cols.append([g.diff(i) for i in range(p)])
    for f in J.gens:
        for i in range(p):
            cols.append([f if t == i else ring.zero for t in range(p)])
    size = p - k
    if size <= 0:
        return Ideal(ring, [ring.one])
    if not cols:
        return Ideal(ring, list(J.gens))
    M = RMat(ring, [[cols[j][i] for j in range(len(cols))] for i in range(p)])
    return ideal_sum(det_ideal(M, size), J)

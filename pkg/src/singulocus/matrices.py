"""Matrices over quotient rings: determinantal ideals, exterior-power maps,
submodule colons, and annihilators of cokernels."""

from __future__ import annotations

from itertools import combinations

from .basis import (
    ModuleKey,
    normal_form_vec,
    reduce_mod_q,
    std_basis_vecs,
    syzygies_of_columns,
    vec_of_polys,
)
from .ideals import Ideal, ideal_intersect, trim_gens
from .ring import Poly, RingMismatch, RingSpec


class RMat:
    """Matrix of polynomials over a fixed ring."""

    def __init__(self, ring: RingSpec, rows):
        self.ring = ring
        self.rows = tuple(
            tuple(ring.poly(e) if isinstance(e, str) else e for e in row) for row in rows
        )
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        self.m = len(self.rows)
        self.n = len(self.rows[0])
        for row in self.rows:
            if len(row) != self.n:
                raise ValueError("ragged matrix")
            for e in row:
                if not ring.compatible(e.ring):
                    raise RingMismatch("entry over a different ring")

    @classmethod
    def identity(cls, ring: RingSpec, m: int) -> "RMat":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)])

    @classmethod
    def zero(cls, ring: RingSpec, m: int, n: int) -> "RMat":
        return cls(ring, [[ring.zero] * n for _ in range(m)])

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def col(self, j: int):
        return tuple(self.rows[i][j] for i in range(self.m))

    def transpose(self) -> "RMat":
        return RMat(self.ring, [[self.rows[i][j] for i in range(self.m)] for j in range(self.n)])

    def __matmul__(self, other: "RMat") -> "RMat":
        if self.n != other.m:
            raise ValueError("shape mismatch in matrix product")
        return RMat(
            self.ring,
            [
                [
                    sum((self.rows[i][k] * other.rows[k][j] for k in range(self.n)), self.ring.zero)
                    for j in range(other.n)
                ]
                for i in range(self.m)
            ],
        )

    def __add__(self, other: "RMat") -> "RMat":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch in matrix sum")
        return RMat(
            self.ring,
            [[self.rows[i][j] + other.rows[i][j] for j in range(self.n)] for i in range(self.m)],
        )

    def __neg__(self) -> "RMat":
        return RMat(self.ring, [[-e for e in row] for row in self.rows])

    def block_diag(self, other: "RMat") -> "RMat":
        z = self.ring.zero
        top = [list(row) + [z] * other.n for row in self.rows]
        bot = [[z] * self.n + list(row) for row in other.rows]
        return RMat(self.ring, top + bot)

    def is_symmetric(self) -> bool:
        return self.m == self.n and all(
            reduce_mod_q(self.rows[i][j] - self.rows[j][i]).is_zero()
            for i in range(self.m)
            for j in range(i)
        )

    def is_skew(self) -> bool:
        return (
            self.m == self.n
            and all(reduce_mod_q(self.rows[i][i]).is_zero() for i in range(self.m))
            and all(
                reduce_mod_q(self.rows[i][j] + self.rows[j][i]).is_zero()
                for i in range(self.m)
                for j in range(i)
            )
        )

    def __repr__(self):
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.rows) + "]"


class Submodule:
    """Finitely generated submodule of R^rank given by generating vectors."""

    def __init__(self, ring: RingSpec, rank: int, gens):
        self.ring = ring
        self.rank = rank
        cleaned = []
        for g in gens:
            g = tuple(reduce_mod_q(p) for p in g)
            if len(g) != rank:
                raise ValueError("generator rank mismatch")
            if all(p.is_zero() for p in g):
                continue
            if g not in cleaned:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._std = None
        self._trunc = None

    @classmethod
    def image(cls, A: RMat) -> "Submodule":
        return cls(A.ring, A.m, [A.col(j) for j in range(A.n)])

    @property
    def std(self):
        if self._std is None:
            vecs = [vec_of_polys(g) for g in self.gens]
            zero_m = (0,) * len(self.ring.vars)
            for q in self.ring.quotient:
                for i in range(self.rank):
                    vecs.append({(i, m): c for m, c in q.terms.items()})
            self._std = std_basis_vecs(vecs, self.ring)
        return self._std

    def contains(self, vec) -> bool:
        from .basis import trunc_map_of

        v = vec_of_polys(vec)
        if not v:
            return True
        std = self.std
        if self._trunc is None:
            self._trunc = (trunc_map_of(std, self.ring),)
        mkey = ModuleKey(self.ring)
        return not normal_form_vec(
            v, std, self.ring, mkey, scale_free=True, trunc=self._trunc[0]
        )

    def contains_submodule(self, other: "Submodule") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Submodule") -> bool:
        return self.contains_submodule(other) and other.contains_submodule(self)

    def __repr__(self):
        return f"submodule(rank {self.rank}, {len(self.gens)} gens)"


def submodule_intersect(A: Submodule, B: Submodule) -> Submodule:
    """A cap B via syzygies of the block matrix [gens(A) | -gens(B)]."""
    if A.ring != B.ring or A.rank != B.rank:
        raise RingMismatch("submodules over different rings or ranks")
    ring = A.ring
    if not A.gens or not B.gens:
        return Submodule(ring, A.rank, [])
    cols = list(A.gens) + [tuple(-p for p in g) for g in B.gens]
    out = []
    na = len(A.gens)
    for s in syzygies_of_columns(cols, ring, A.rank):
        combo = [ring.zero] * A.rank
        for j in range(na):
            for i in range(A.rank):
                combo[i] = combo[i] + s[j] * A.gens[j][i]
        out.append(tuple(combo))
    return Submodule(ring, A.rank, out)


# ---------------------------------------------------------------------------
# flattenings of matrix spaces (coordinates on Sigma)


def flatten_full(A: RMat):
    """Row-major coordinates on Mat_{m x n}."""
    return tuple(A.rows[i][j] for i in range(A.m) for j in range(A.n))


def flatten_sym(A: RMat):
    """Coordinates on symmetric matrices: entries (i, j) with i <= j."""
    return tuple(A.rows[i][j] for i in range(A.m) for j in range(i, A.n))


def flatten_skew(A: RMat):
    """Coordinates on skew matrices: entries (i, j) with i < j."""
    return tuple(A.rows[i][j] for i in range(A.m) for j in range(i + 1, A.n))


FLATTEN = {"full": flatten_full, "sym": flatten_sym, "skew": flatten_skew}


def sigma_rank(shape: str, m: int, n: int) -> int:
    if shape == "full":
        return m * n
    if shape == "sym":
        return m * (m + 1) // 2
    if shape == "skew":
        return m * (m - 1) // 2
    raise ValueError(f"unknown shape {shape!r}")


# ---------------------------------------------------------------------------
# determinantal ideals


def _minor(A: RMat, rows, cols, cache) -> Poly:
    if not rows:
        return A.ring.one
    key = (rows, cols)
    got = cache.get(key)
    if got is not None:
        return got
    i = rows[0]
    rest = rows[1:]
    total = A.ring.zero
    sign = 1
    for pos, j in enumerate(cols):
        e = A.entry(i, j)
        if not e.is_zero():
            sub = _minor(A, rest, cols[:pos] + cols[pos + 1 :], cache)
            total = total + sign * e * sub
        sign = -sign
    total = reduce_mod_q(total)
    cache[key] = total
    return total


def det(A: RMat) -> Poly:
    if A.m != A.n:
        raise ValueError("determinant of a non-square matrix")
    return _minor(A, tuple(range(A.m)), tuple(range(A.n)), {})


def det_ideal(A: RMat, j: int) -> Ideal:
    """Ideal of all j x j minors; I_0 = R, I_{> min(m,n)} = (0)."""
    if j < 0:
        raise ValueError("minor size must be non-negative")
    ring = A.ring
    if j == 0:
        return Ideal(ring, [ring.one])
    if j > min(A.m, A.n):
        return Ideal(ring, [])
    cache: dict = {}
    gens = [
        _minor(A, rows, cols, cache)
        for rows in combinations(range(A.m), j)
        for cols in combinations(range(A.n), j)
    ]
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# exterior powers


def _colex_subsets(m: int, k: int):
    return sorted(combinations(range(m), k), key=lambda s: tuple(reversed(s)))


def exterior_map(A: RMat, k: int) -> RMat:
    """Matrix of the k-th wedge pairing: column (c, T) maps to (A e_c) ^ e_T.

    Rows are indexed by k-subsets of row indices in colexicographic order;
    columns by (A-column, (k-1)-subset) pairs, subset order also colex.
    """
    if not 1 <= k <= A.m:
        raise ValueError("wedge index out of range")
    ring = A.ring
    row_sets = _colex_subsets(A.m, k)
    row_pos = {s: i for i, s in enumerate(row_sets)}
    sub_sets = _colex_subsets(A.m, k - 1)
    cols = []
    for c in range(A.n):
        for T in sub_sets:
            col = [ring.zero] * len(row_sets)
            for i in range(A.m):
                if i in T:
                    continue
                e = A.entry(i, c)
                if e.is_zero():
                    continue
                S = tuple(sorted(T + (i,)))
                sgn = (-1) ** sum(1 for t in T if t < i)
                col[row_pos[S]] = col[row_pos[S]] + sgn * e
            cols.append(col)
    return RMat(ring, [[cols[j][i] for j in range(len(cols))] for i in range(len(row_sets))])


# ---------------------------------------------------------------------------
# annihilators


def colon_into_submodule(N: Submodule, v) -> Ideal:
    """(N : v) = { f in R : f*v in N }."""
    ring = N.ring
    v = tuple(reduce_mod_q(p) for p in v)
    if len(v) != N.rank:
        raise ValueError("vector rank mismatch")
    if all(p.is_zero() for p in v):
        return Ideal(ring, [ring.one])
    # eliminate R^rank against [gens of N | v] with a single payload slot on v:
    # vectors supported purely in the payload are exactly the multipliers f
    # with f*v in N
    rank = N.rank
    zero_m = (0,) * len(ring.vars)
    gens = [vec_of_polys(g) for g in N.gens]
    vv = vec_of_polys(v)
    vv[(rank, zero_m)] = ring.field.one
    gens.append(vv)
    for q in ring.quotient:
        for i in range(rank):
            gens.append({(i, m): c for m, c in q.terms.items()})
    # payload-only vectors recorded while reducing the head-block S-pairs
    # already generate the colon ideal, so pairs among them are skipped
    basis = std_basis_vecs(gens, ring, split=rank, tail_pred=lambda lead: lead[0] >= rank)
    out = []
    for w in basis:
        if all(comp >= rank for (comp, _) in w):
            out.append(Poly(ring, {m: c for (_, m), c in w.items()}))
    # the raw multipliers carry large elimination tails; re-presenting the
    # ideal by its own (rank-1) standard basis gives small canonical generators
    raw = Ideal(ring, out)
    if raw.is_zero():
        return raw
    return Ideal(ring, trim_gens(ring, raw.std))


def ann_quotient(N: Submodule) -> Ideal:
    """Annihilator of R^rank / N = { f : f*e_i in N for every i }.

    Computed as a single colon: N is copied into the rank diagonal blocks of
    R^(rank^2) and the colon is taken against the sum of the block-diagonal
    unit vectors, which imposes all component conditions at once instead of
    intersecting rank separate colon ideals.
    """
    ring = N.ring
    r = N.rank
    if not N.gens:
        return Ideal(ring, [])
    if r == 1:
        return colon_into_submodule(N, (ring.one,))
    # seed the blocks with the standard basis of N (computed once at rank r):
    # in-block S-pairs are then already resolved and are not redone r times
    from .basis import vec_to_polys

    cols = [vec_to_polys(v, ring, r) for v in N.std]
    big = []
    for blk in range(r):
        lo, hi = blk * r, (blk + 1) * r
        for g in cols:
            big.append(tuple(g[i - lo] if lo <= i < hi else ring.zero for i in range(r * r)))
    diag = tuple(ring.one if i // r == i % r else ring.zero for i in range(r * r))
    return colon_into_submodule(Submodule(ring, r * r, big), diag)


def ann_coker(A: RMat) -> Ideal:
    """Annihilator of R^m / Im(A)."""
    return ann_quotient(Submodule.image(A))


ann_fp_module = ann_coker


def ann_coker_j(A: RMat, j: int) -> Ideal:
    """Generalized annihilator: Ann.Coker of the (m+1-j)-th exterior map."""
    ring = A.ring
    if j <= 0:
        return Ideal(ring, [ring.one])
    if j > A.m:
        return Ideal(ring, [])
    return ann_coker(exterior_map(A, A.m + 1 - j))

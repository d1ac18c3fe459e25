"""Derivation modules Der_k(R) and Der_k(R, m), and derivation actions on
polynomials, ideals and matrices.  Requires characteristic zero."""

from __future__ import annotations

from .basis import reduce_mod_q, syzygies_of_columns
from .ideals import Ideal
from .matrices import FLATTEN, RMat, Submodule, submodule_intersect
from .ring import Poly, RingSpec


class DerBasis:
    """Generating set of a derivation module; each generator is the coefficient
    tuple (a_1, ..., a_p) of D = sum a_i d/dx_i."""

    def __init__(self, ring: RingSpec, gens, variant: str):
        self.ring = ring
        self.gens = tuple(tuple(g) for g in gens)
        self.variant = variant  # "full" or "into-maximal"

    def as_submodule(self) -> Submodule:
        return Submodule(self.ring, len(self.ring.vars), self.gens)

    def __repr__(self):
        names = self.ring.vars
        parts = []
        for g in self.gens:
            terms = [f"({a})*d/d{v}" for a, v in zip(g, names) if not a.is_zero()]
            parts.append(" + ".join(terms) if terms else "0")
        return "derivations[" + "; ".join(parts) + "]"


def _require_char_zero(ring: RingSpec):
    if ring.field.characteristic != 0:
        raise ValueError("derivation computations require a characteristic-zero field")


def der_module(ring: RingSpec) -> DerBasis:
    """Der_k(R): tuples a with sum a_i dq/dx_i in Q for every quotient generator q."""
    _require_char_zero(ring)
    p = len(ring.vars)
    if not ring.quotient:
        units = []
        for i in range(p):
            units.append(tuple(ring.one if t == i else ring.zero for t in range(p)))
        return DerBasis(ring, units, "full")
    qs = ring.quotient
    cols = []
    for i in range(p):
        cols.append(tuple(q.diff(i) for q in qs))
    gens = syzygies_of_columns(cols, ring, len(qs))
    return DerBasis(ring, gens, "full")


def der_module_m(ring: RingSpec) -> DerBasis:
    """Der_k(R, m) = Der_k(R) intersected with (m*R)^p, m = <x_1..x_p>."""
    _require_char_zero(ring)
    p = len(ring.vars)
    full = der_module(ring).as_submodule()
    mgens = []
    for i in range(p):
        for k in range(p):
            vec = [ring.zero] * p
            vec[i] = ring.var(k)
            mgens.append(tuple(vec))
    mRp = Submodule(ring, p, mgens)
    inter = submodule_intersect(full, mRp)
    return DerBasis(ring, inter.gens, "into-maximal")


def apply_der(D, target):
    """Apply D = sum a_i d/dx_i to a polynomial or (entrywise) to a matrix."""
    if isinstance(target, RMat):
        return RMat(
            target.ring,
            [[apply_der(D, e) for e in row] for row in target.rows],
        )
    f: Poly = target
    out = f.ring.zero
    for i, a in enumerate(D):
        if not a.is_zero():
            out = out + a * f.diff(i)
    return reduce_mod_q(out)


def der_ideal_image(basis: DerBasis, J: Ideal) -> Ideal:
    """Ideal generated by { D(g) : D in basis, g in gens(J) }."""
    return Ideal(J.ring, [apply_der(D, g) for D in basis.gens for g in J.gens])


def der_matrix_image(basis: DerBasis, A: RMat, shape: str = "full") -> Submodule:
    """Submodule of the flattened matrix space spanned by { D(A) }."""
    if shape == "sym" and not A.is_symmetric():
        raise ValueError("matrix is not symmetric")
    if shape == "skew" and not A.is_skew():
        raise ValueError("matrix is not skew-symmetric")
    flat = FLATTEN[shape]
    gens = [flat(apply_der(D, A)) for D in basis.gens]
    rank = len(flat(A))
    return Submodule(A.ring, rank, gens)

"""Tangent spaces to matrix-group orbits, the annihilator of the associated
deformation module T^1, and the lower/upper bound ideals with verification."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .derivations import der_matrix_image, der_module_m
from .ideals import (
    UNDETERMINED,
    Ideal,
    RadicalReport,
    ideal_intersect,
    ideal_sum,
    radical_equal,
    saturation,
)
from .matrices import (
    FLATTEN,
    RMat,
    Submodule,
    ann_coker,
    ann_quotient,
    det_ideal,
    sigma_rank,
)
from .ring import RingSpec
from .singloc import pfaffian_ideal, sing_locus

GROUPS = ("Glr", "Aut", "cGlr", "cGcongr")
SHAPES = ("full", "sym", "skew")


@dataclass(frozen=True)
class GroupAction:
    group: str
    shape: str = "full"

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValueError(f"unknown group {self.group!r}")
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")

    def validate(self, A: RMat):
        if self.group == "cGcongr":
            if A.m != A.n:
                raise ValueError("congruence action requires a square matrix")
            if self.shape == "sym" and not A.is_symmetric():
                raise ValueError("matrix is not symmetric")
            if self.shape == "skew" and not A.is_skew():
                raise ValueError("matrix is not skew-symmetric")
        elif self.shape != "full":
            raise ValueError("shapes other than full only apply to the congruence action")


def _unit_matrix(ring: RingSpec, m: int, n: int, a: int, b: int) -> RMat:
    rows = [[ring.one if (i, j) == (a, b) else ring.zero for j in range(n)] for i in range(m)]
    return RMat(ring, rows)


def tangent_orbit_presentation(ring: RingSpec, A: RMat, action: GroupAction) -> Submodule:
    """Generators of the orbit tangent space inside the flattened matrix space."""
    action.validate(A)
    flat = FLATTEN[action.shape]
    cols = []
    if action.group in ("Glr", "cGlr"):
        for a in range(A.m):
            for b in range(A.m):
                cols.append(flat(_unit_matrix(ring, A.m, A.m, a, b) @ A))
        for c in range(A.n):
            for d in range(A.n):
                cols.append(flat(A @ _unit_matrix(ring, A.n, A.n, c, d)))
    if action.group == "cGcongr":
        for a in range(A.m):
            for b in range(A.m):
                E = _unit_matrix(ring, A.m, A.m, a, b)
                cols.append(flat((E @ A) + (A @ E.transpose())))
    if action.group in ("Aut", "cGlr", "cGcongr"):
        ders = der_module_m(ring)
        cols.extend(
            der_matrix_image(ders, A, action.shape).gens
        )
    rank = sigma_rank(action.shape, A.m, A.n)
    return Submodule(ring, rank, cols)


def t1_annihilator(ring: RingSpec, A: RMat, action: GroupAction) -> Ideal:
    """Ann of (flattened matrix space) / (orbit tangent space)."""
    return ann_quotient(tangent_orbit_presentation(ring, A, action))


# ---------------------------------------------------------------------------
# bound ideals


def _upper_intersection(ring: RingSpec, A: RMat, js, grade_of_j) -> Ideal:
    result = None
    for j in js:
        r = grade_of_j(j)
        if r < 1:
            continue  # Ann_{<=0} = R contributes a neutral factor
        term = saturation(
            sing_locus(det_ideal(A, j + 1), r, variant="into-maximal"),
            det_ideal(A, j),
        )
        result = term if result is None else ideal_intersect(result, term)
    return result


def glr_bounds(ring: RingSpec, A: RMat):
    """(lower, upper) bound ideals for the left-right-equivalence annihilator."""
    if A.m > A.n:
        raise ValueError("expects rows <= columns; transpose the input")
    der_image = der_matrix_image(der_module_m(ring), A, "full")
    lower = ideal_sum(ann_coker(A), ann_quotient(der_image))
    upper = _upper_intersection(
        ring, A, range(A.m), lambda j: (A.m - j) * (A.n - j)
    )
    return lower, upper


def congr_bounds(ring: RingSpec, A: RMat, shape: str):
    """(lower, upper) bound ideals for the congruence-equivalence annihilator."""
    if shape not in ("sym", "skew"):
        raise ValueError("congruence bounds need shape sym or skew")
    action = GroupAction("cGcongr", shape)
    action.validate(A)
    m = A.m
    der_image = der_matrix_image(der_module_m(ring), A, shape)
    ann_sigma = ann_quotient(der_image)
    if shape == "sym":
        lower = ideal_sum(ann_coker(A), ann_sigma)
        upper = _upper_intersection(ring, A, range(m), lambda j: comb(m - j + 1, 2))
    else:
        if m % 2 == 0:
            lower = ideal_sum(ann_coker(A), ann_sigma)
        else:
            lower = ideal_sum(pfaffian_ideal(A, m - 1), ann_sigma)
        upper = _upper_intersection(
            ring, A, [j for j in range(m) if j % 2 == 0], lambda j: comb(m - j, 2)
        )
    return lower, upper


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class T1Report:
    annihilator: Ideal
    lower: Ideal
    upper: Ideal
    lower_in_ann: bool
    ann_in_upper: bool
    radical_support: object  # True / False / UNDETERMINED

    @property
    def status(self) -> str:
        if self.radical_support is True and self.lower_in_ann and self.ann_in_upper:
            return "PASS"
        if self.radical_support is UNDETERMINED:
            return "UNDETERMINED" if self.lower_in_ann and self.ann_in_upper else "FAIL"
        return "FAIL"


def bounds_for_action(ring: RingSpec, A: RMat, action: GroupAction):
    if action.group == "cGcongr":
        return congr_bounds(ring, A, action.shape)
    return glr_bounds(ring, A)


def radical_support_check(ring: RingSpec, A: RMat, action: GroupAction) -> T1Report:
    """Compare sqrt(Ann T^1) with the saturation-intersection ideal, generator-wise."""
    if action.group not in ("cGlr", "cGcongr"):
        raise ValueError("radical support check applies to the cGlr and cGcongr actions")
    ann = t1_annihilator(ring, A, action)
    lower, upper = bounds_for_action(ring, A, action)
    report: RadicalReport = radical_equal(ann, upper)
    return T1Report(
        annihilator=ann,
        lower=lower,
        upper=upper,
        lower_in_ann=ann.contains_ideal(lower),
        ann_in_upper=upper.contains_ideal(ann),
        radical_support=report.equal,
    )

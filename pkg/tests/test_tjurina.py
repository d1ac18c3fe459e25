"""Orbit tangent spaces, T^1 annihilators, and the bound/equality verifiers."""

import random

import pytest

from singulocus import (
    DEGREVLEX,
    NEGDEGREVLEX,
    UNDETERMINED,
    GroupAction,
    Ideal,
    RingSpec,
    RMat,
    Submodule,
    congr_bounds,
    det_ideal,
    glr_bounds,
    ideal_sum,
    pfaffian_ideal,
    radical_support_check,
    sing_locus,
    t1_annihilator,
    tangent_orbit_presentation,
    der_matrix_image,
    der_module_m,
    ann_quotient,
)

from conftest import rand_matrix, rand_skew, rand_symmetric


@pytest.fixture
def local_plane():
    return RingSpec(("x", "y"), NEGDEGREVLEX)


def test_action_validation(qxy):
    A = RMat(qxy, [["x", "y"], ["0", "x"]])
    with pytest.raises(ValueError):
        GroupAction("cGcongr", "sym").validate(A)
    with pytest.raises(ValueError):
        GroupAction("Glr", "sym").validate(A)
    with pytest.raises(ValueError):
        GroupAction("nope")


def test_presentation_scalar_case(local_plane):
    # 1x1 matrix: columns are f itself and the derivation images D(f)
    f = local_plane.poly("x^2 + y^3")
    A = RMat(local_plane, [[f]])
    pres = tangent_orbit_presentation(local_plane, A, GroupAction("cGlr"))
    ders = der_module_m(local_plane)
    from singulocus import apply_der

    expect = Submodule(
        local_plane, 1, [(f,)] + [(apply_der(D, f),) for D in ders.gens]
    )
    assert pres.equals(expect)


def test_presentation_zero_matrix(local_plane):
    pres = tangent_orbit_presentation(
        local_plane, RMat.zero(local_plane, 2, 2), GroupAction("Glr")
    )
    assert not pres.gens


def test_t1_scalar_equals_f_plus_der_image(local_plane):
    f = local_plane.poly("x^2 + y^3")
    A = RMat(local_plane, [[f]])
    ann = t1_annihilator(local_plane, A, GroupAction("cGlr"))
    img = der_matrix_image(der_module_m(local_plane), A)
    expect = ideal_sum(Ideal(local_plane, [f]), Ideal(local_plane, [g[0] for g in img.gens]))
    assert ann.equals(expect)


def test_t1_full_orbit_is_whole_ring(qxy):
    ann = t1_annihilator(qxy, RMat.identity(qxy, 2), GroupAction("Glr"))
    assert ann.is_whole_ring()


def test_row_case_exactness(local_plane):
    # one-row matrices: Ann(T^1) = Sing^(m)_n(I_1(A)) exactly
    A = RMat(local_plane, [["x", "y"]])
    ann = t1_annihilator(local_plane, A, GroupAction("cGlr"))
    sl = sing_locus(det_ideal(A, 1), 2, variant="into-maximal")
    assert ann.equals(sl)


def test_glr_sandwich_diag(local_plane):
    A = RMat(local_plane, [["x", "0"], ["0", "y"]])
    ann = t1_annihilator(local_plane, A, GroupAction("cGlr"))
    lower, upper = glr_bounds(local_plane, A)
    assert ann.contains_ideal(lower)
    assert upper.contains_ideal(ann)


def test_glr_bounds_full_orbit(local_plane):
    A = RMat.identity(local_plane, 2)
    ann = t1_annihilator(local_plane, A, GroupAction("cGlr"))
    lower, upper = glr_bounds(local_plane, A)
    assert ann.is_whole_ring() and lower.is_whole_ring() and upper.is_whole_ring()


def test_glr_bounds_shape_requirement(local_plane):
    with pytest.raises(ValueError):
        glr_bounds(local_plane, RMat(local_plane, [["x"], ["y"]]))


def test_congr_sandwich_symmetric(local_plane):
    A = RMat(local_plane, [["x", "0"], ["0", "y"]])
    ann = t1_annihilator(local_plane, A, GroupAction("cGcongr", "sym"))
    lower, upper = congr_bounds(local_plane, A, "sym")
    assert ann.contains_ideal(lower)
    assert upper.contains_ideal(ann)


def test_congr_skew_lower_bound_odd():
    R = RingSpec(("x", "y", "z"), NEGDEGREVLEX)
    A = RMat(R, [["0", "x", "y"], ["-x", "0", "z"], ["-y", "-z", "0"]])
    ann = t1_annihilator(R, A, GroupAction("cGcongr", "skew"))
    lower, upper = congr_bounds(R, A, "skew")
    # odd m: lower bound is built from Pf_{m-1} instead of Ann.Coker
    assert ann.contains_ideal(lower)
    assert upper.contains_ideal(ann)
    for g in pfaffian_ideal(A, 2).gens:
        assert ann.contains(g)


def test_nilradical_bound_fixture():
    # zero-dimensional ring, full congruence shape: Ann(T^1) is nilpotent
    R = RingSpec(("x",), DEGREVLEX, quotient=["x^3"])
    rng = random.Random(91)
    A = rand_matrix(rng, R, 2, 2, max_deg=2, in_m=False)
    ann = t1_annihilator(R, A, GroupAction("cGcongr", "full"))
    nil = Ideal(R, ["x"])
    for g in ann.gens:
        assert nil.contains(g)


def test_invariance_under_constant_transport(local_plane):
    rng = random.Random(101)
    U = RMat(local_plane, [["1", "1"], ["0", "1"]])
    V = RMat(local_plane, [["1", "0"], ["2", "1"]])
    for _ in range(3):
        A = rand_matrix(rng, local_plane, 2, 2)
        a1 = t1_annihilator(local_plane, A, GroupAction("cGlr"))
        a2 = t1_annihilator(local_plane, U @ A @ V, GroupAction("cGlr"))
        assert a1.equals(a2)
    S = rand_symmetric(rng, local_plane, 2)
    b1 = t1_annihilator(local_plane, S, GroupAction("cGcongr", "sym"))
    b2 = t1_annihilator(local_plane, U @ S @ U.transpose(), GroupAction("cGcongr", "sym"))
    assert b1.equals(b2)


def test_radical_support_diag_xx():
    R = RingSpec(("x",), NEGDEGREVLEX)
    A = RMat(R, [["x", "0"], ["0", "x"]])
    report = radical_support_check(R, A, GroupAction("cGlr"))
    assert report.status == "PASS"
    # sqrt(Ann T^1) = m = (x) here
    assert report.annihilator.equals(Ideal(R, ["x"]))


def test_radical_support_row_case(local_plane):
    A = RMat(local_plane, [["x", "y"]])
    report = radical_support_check(local_plane, A, GroupAction("cGlr"))
    assert report.status in ("PASS", "UNDETERMINED")
    assert report.lower_in_ann and report.ann_in_upper


def test_radical_support_requires_connected_group(local_plane):
    A = RMat(local_plane, [["x"]])
    with pytest.raises(ValueError):
        radical_support_check(local_plane, A, GroupAction("Glr"))

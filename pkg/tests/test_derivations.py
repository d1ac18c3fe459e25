"""Derivation modules and their actions."""

import random

import pytest

from singulocus import (
    DEGREVLEX,
    NEGDEGREVLEX,
    FieldGF,
    Ideal,
    RingSpec,
    RMat,
    Submodule,
    apply_der,
    der_ideal_image,
    der_matrix_image,
    der_module,
    der_module_m,
)
from singulocus.basis import reduce_mod_q

from conftest import rand_poly


def test_free_ring_gives_partials(qxyz):
    D = der_module(qxyz)
    expect = Submodule(
        qxyz,
        3,
        [
            (qxyz.one, qxyz.zero, qxyz.zero),
            (qxyz.zero, qxyz.one, qxyz.zero),
            (qxyz.zero, qxyz.zero, qxyz.one),
        ],
    )
    assert D.as_submodule().equals(expect)


def test_node_curve_derivations():
    R = RingSpec(("x", "y", "z"), NEGDEGREVLEX, quotient=["x*y"])
    D = der_module(R)
    x, y, z = (R.var(v) for v in "xyz")
    expect = Submodule(R, 3, [(x, R.zero, R.zero), (R.zero, y, R.zero), (R.zero, R.zero, R.one)])
    assert D.as_submodule().equals(expect)


def test_fat_point_contains_euler():
    R = RingSpec(("x",), DEGREVLEX, quotient=["x^2"])
    assert der_module(R).as_submodule().contains((R.var("x"),))


def test_derivations_preserve_quotient():
    R = RingSpec(("x", "y", "z"), NEGDEGREVLEX, quotient=["x*y - z^2"])
    for D in der_module(R).gens:
        for q in R.quotient:
            assert reduce_mod_q(apply_der(D, q)).is_zero()


def test_m_variant_subset_and_entries_in_m():
    R = RingSpec(("x", "y", "z"), NEGDEGREVLEX, quotient=["x*y"])
    full = der_module(R).as_submodule()
    dm = der_module_m(R)
    assert dm.variant == "into-maximal"
    for g in dm.gens:
        assert full.contains(g)
        for a in g:
            assert reduce_mod_q(a).constant_term() == 0
    x, y = R.var("x"), R.var("y")
    sub = dm.as_submodule()
    assert sub.contains((x, R.zero, R.zero))
    assert sub.contains((R.zero, y, R.zero))
    assert sub.contains((R.zero, R.zero, x))
    assert not sub.contains((R.zero, R.zero, R.one))


def test_m_variant_regular_case_equals_m_times_der(qxy_local):
    dm = der_module_m(qxy_local).as_submodule()
    x, y = qxy_local.var("x"), qxy_local.var("y")
    z = qxy_local.zero
    expect = Submodule(qxy_local, 2, [(x, z), (y, z), (z, x), (z, y)])
    assert dm.equals(expect)


def test_m_variant_one_variable():
    R = RingSpec(("x",), NEGDEGREVLEX)
    expect = Submodule(R, 1, [(R.var("x"),)])
    assert der_module_m(R).as_submodule().equals(expect)


def test_m_times_der_inside_m_variant():
    R = RingSpec(("x", "y"), NEGDEGREVLEX, quotient=["x^3 - y^2"])
    full = der_module(R)
    dm = der_module_m(R).as_submodule()
    for D in full.gens:
        for v in ("x", "y"):
            scaled = tuple(R.var(v) * a for a in D)
            assert dm.contains(scaled)


def test_apply_der_examples(qxy):
    dx = (qxy.one, qxy.zero)
    assert apply_der(dx, qxy.poly("x^2*y")) == qxy.poly("2*x*y")
    euler_x = (qxy.var("x"), qxy.zero)
    assert apply_der(euler_x, qxy.poly("x^7 + y^8")) == qxy.poly("7*x^7")
    C = RMat(qxy, [["3", "1/2"], ["0", "7"]])
    out = apply_der(dx, C)
    assert all(e.is_zero() for row in out.rows for e in row)


def test_leibniz_on_quotient():
    R = RingSpec(("x", "y"), NEGDEGREVLEX, quotient=["x*y"])
    rng = random.Random(13)
    ders = der_module(R).gens
    for _ in range(5):
        f, g = rand_poly(rng, R), rand_poly(rng, R)
        for D in ders:
            lhs = apply_der(D, reduce_mod_q(f * g))
            rhs = reduce_mod_q(f * apply_der(D, g) + g * apply_der(D, f))
            assert reduce_mod_q(lhs - rhs).is_zero()


def test_der_ideal_image():
    R = RingSpec(("x",), DEGREVLEX)
    img = der_ideal_image(der_module(R), Ideal(R, ["x^2"]))
    assert img.equals(Ideal(R, ["x"]))


def test_der_matrix_image_zero(qxy):
    img = der_matrix_image(der_module(qxy), RMat.zero(qxy, 2, 2))
    assert not img.gens


def test_der_matrix_image_m_variant(qxy_local):
    f = qxy_local.poly("x^2 + y^3")
    A = RMat(qxy_local, [[f]])
    img = der_matrix_image(der_module_m(qxy_local), A)
    x, y = qxy_local.var("x"), qxy_local.var("y")
    grads = [qxy_local.poly("2*x"), qxy_local.poly("3*y^2")]
    expect = Submodule(qxy_local, 1, [(v * g,) for v in (x, y) for g in grads])
    assert img.equals(expect)


def test_shape_validation(qxy):
    A = RMat(qxy, [["x", "y"], ["0", "x"]])
    with pytest.raises(ValueError):
        der_matrix_image(der_module(qxy), A, "sym")
    with pytest.raises(ValueError):
        der_matrix_image(der_module(qxy), A, "skew")


def test_characteristic_zero_enforced():
    R = RingSpec(("x",), DEGREVLEX, field=FieldGF(5))
    with pytest.raises(ValueError):
        der_module(R)

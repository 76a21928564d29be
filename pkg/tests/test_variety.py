from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from charvar.algebra import QQ, ZZ, poly_eval, polyvars
from charvar.chebyshev import cheb_S
from charvar.errors import ExceptionalLocus, InvalidParams, NonHyperbolic
from charvar.variety import (
    AffinePoint,
    LinkParams,
    birational_roundtrip,
    build_model,
    curve_poly,
    diagonal_split,
    map_U_to_V,
    map_U_to_W,
    map_V_to_U,
    map_W_to_U,
    natural_model,
    reducible_poly,
    t_poly,
    t_poly_simplified,
    three_family_model,
    u_model,
)

from conftest import odd_hyperbolic

x, y, z = polyvars("x y z")
t, tz_z = polyvars("t z")
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def test_link_params():
    p = LinkParams(5, -7)
    assert (p.m, p.n) == (2, -4)
    assert p.hyperbolic
    assert not LinkParams(1, 5).hyperbolic
    with pytest.raises(NonHyperbolic):
        LinkParams(1, 5).require_hyperbolic()
    with pytest.raises(InvalidParams):
        LinkParams(4, 5)


def test_t_poly_examples():
    assert t_poly(0) == x * y - z
    assert t_poly(1) == (x * z - y) * (y * z - x) - z * (z * z + 1) + 4 * z


@pytest.mark.parametrize("m", range(-8, 9))
def test_t_forms_agree(m):
    assert t_poly(m) == t_poly_simplified(m)


def test_reducible_poly_values():
    assert poly_eval(reducible_poly(), {"x": 2, "y": 2, "z": 2}, ZZ) == 0
    assert poly_eval(reducible_poly(), {"x": 0, "y": 0, "z": 0}, ZZ) == 4


def test_curve_examples():
    assert curve_poly(3, 3) == t - tz_z
    assert curve_poly(5, 5) == (t - tz_z) * (t * tz_z + 1)
    St = lambda j: cheb_S(j, "t").in_vars(("t", "z"))
    Sz = lambda j: cheb_S(j, "z").in_vars(("t", "z"))
    assert curve_poly(5, 7) == St(3) * Sz(1) - St(2) * Sz(2)
    assert curve_poly(5, 7) == (t**3 - 2 * t) * tz_z - (t * t - 1) * (tz_z * tz_z - 1)


def test_natural_model_examples():
    assert natural_model(3, 3) == t_poly(1) - z
    for m in (-4, -3, -2, 1, 2, 3, 4):
        # J(2m+1, 3): n = 1 so the curve is t S_{m-1}(z) - S_m(z)
        assert natural_model(2 * m + 1, 3) == three_family_model(m)


def test_u_model_matches_substitution():
    m = 2
    um = u_model(5, 7)
    pt = {"x": Fraction(3, 2), "y": Fraction(-1, 3), "z": Fraction(5, 7)}
    img = map_V_to_U(AffinePoint(pt), m)
    assert poly_eval(um, img.coords, QQ) == poly_eval(natural_model(5, 7), pt, QQ)


def test_build_model_components():
    mdl = build_model(7, 7)
    labels = [lab for lab, _ in mdl.components]
    assert labels == ["canonical", "extra"]
    assert mdl.components[0][1] * mdl.components[1][1] == mdl.curve
    assert [lab for lab, _ in build_model(3, 3).components] == ["canonical"]
    doc = mdl.to_json()
    assert doc["m"] == 3 and doc["n"] == 3


def test_diagonal_split_examples():
    assert diagonal_split(3) == (t - tz_z, None)
    assert diagonal_split(5) == (t - tz_z, t * tz_z + 1)
    diag, rest = diagonal_split(-5)
    assert diag * rest == curve_poly(-5, -5)


@pytest.mark.parametrize("l", [v for v in range(3, 16, 2)] + [-v for v in range(3, 16, 2)])
def test_diagonal_divisibility(l):
    diag, rest = diagonal_split(l)
    if abs(l) == 3:
        assert rest is None
    else:
        assert diag * rest == curve_poly(l, l)


def test_birational_examples():
    pt = AffinePoint({"x": Fraction(3), "y": Fraction(5), "z": Fraction(0)})
    img = map_V_to_U(pt, 1)
    assert (img["u"], img["v"], img["z"]) == (-5, -3, 0)
    assert map_U_to_V(img, 1).coords == pt.coords
    ident = map_V_to_U(pt, 0)
    assert (ident["u"], ident["v"]) == (3, 5)
    w = map_U_to_W(AffinePoint({"u": 1, "v": 1, "z": 0}), 1)
    assert w["t"] == 1
    assert map_W_to_U(w, 1)["u"] == 1
    w0 = map_U_to_W(AffinePoint({"u": Fraction(2), "v": Fraction(3), "z": Fraction(1)}), 0)
    assert w0["t"] == 2 * 3 - 1


def test_exceptional_loci():
    with pytest.raises(ExceptionalLocus):
        map_W_to_U(AffinePoint({"t": Fraction(1), "v": Fraction(0), "z": Fraction(2)}), 1)
    # S_2(1) = 0, so U -> V is undefined over z = 1 when m = 1
    with pytest.raises(ExceptionalLocus):
        map_U_to_V(AffinePoint({"u": Fraction(1), "v": Fraction(1), "z": Fraction(1)}), 1)


@given(st.integers(-4, 4), fracs, fracs, fracs)
def test_roundtrip_property(m, a, b, c):
    pt = AffinePoint({"x": a, "y": b, "z": c})
    try:
        back = map_U_to_V(map_V_to_U(pt, m), m)
    except ExceptionalLocus:
        assert cheb_S(2 * m).eval({"z": c}, QQ) == 0
        return
    assert back.coords == pt.coords


@given(st.integers(-4, 4), fracs, fracs, fracs)
def test_maps_carry_models(m, a, b, c):
    # the polynomial maps pull the (u,v,z) and (t,v,z) models back to the natural model
    k, l = 2 * m + 1, 5
    pt = AffinePoint({"x": a, "y": b, "z": c})
    upt = map_V_to_U(pt, m)
    wpt = map_U_to_W(upt, m)
    base = poly_eval(natural_model(k, l), pt.coords, QQ)
    assert poly_eval(u_model(k, l), upt.coords, QQ) == base
    assert poly_eval(curve_poly(k, l), {"t": wpt["t"], "z": wpt["z"]}, QQ) == base


@pytest.mark.parametrize("m", range(-4, 5))
def test_birational_roundtrip_hundred(m):
    rep = birational_roundtrip(m, 100, seed=11)
    assert rep["passed"]
    assert all(v["checked"] == 100 for v in rep["maps"].values())


@given(odd_hyperbolic, odd_hyperbolic)
def test_curve_bidegree_matches_indices(k, l):
    c = curve_poly(k, l)
    assert c.degree("z") == abs(k) // 2
    assert c.degree("t") == abs(l) // 2

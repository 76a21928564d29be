from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from charvar.algebra import MultiPoly, QuotientRing, polyvars
from charvar.chebyshev import cheb_S, family_poly
from charvar.errors import InvalidParams, NonHyperbolic, SuspectSingularity
from charvar.geometry import (
    FV,
    F_homogeneous,
    F_partials,
    ProjectivePoint,
    _vanishes,
    critical_value_bound,
    degenerate_fibers,
    euler_blowup,
    invariants,
    singular_points,
    singular_search_crosscheck,
    smoothness_check,
)
from charvar.variety import curve_poly, three_family_model

SURFACE_MS = [1, 2, 3, 4, -2, -3, -4]
x, y, u, z, w = (MultiPoly.var(v, FV) for v in FV)


# invariants


def test_invariant_examples():
    rep = invariants(5, 7)
    assert rep.bidegree == (2, 3)
    assert rep.components[0]["genus"] == 2
    assert rep.deg_irrationality == 2
    for l in (5, 7, -9, 11):
        assert invariants(3, l).components[0]["genus"] == 0
    c0, c1 = invariants(7, 7).components
    assert (c0["genus"], c0["gonality"]) == (0, 1)
    assert (c1["genus"], c1["gonality"]) == (1, 2)
    assert len(invariants(3, 3).components) == 1
    with pytest.raises(NonHyperbolic):
        invariants(1, 5)


odd15 = st.sampled_from([v for v in range(3, 16, 2)] + [-v for v in range(3, 16, 2)])


@given(odd15, odd15)
def test_genus_bidegree_law(k, l):
    rep = invariants(k, l)
    a, b = abs(k) // 2, abs(l) // 2
    c = curve_poly(k, l)
    assert rep.bidegree == (c.degree("z"), c.degree("t")) == (a, b)
    if k != l:
        (comp,) = rep.components
        assert comp["genus"] == (a - 1) * (b - 1)
        assert rep.deg_irrationality == min(a, b)


# surface model


def test_F_degenerate_cases():
    assert F_homogeneous(0) == -u * u
    F1 = F_homogeneous(1)
    t1 = F1.specialize({"u": 1, "w": 1}).in_vars(("x", "y", "z"))
    assert t1 == three_family_model(1)


@pytest.mark.parametrize("m", [-4, -3, -2, 1, 2, 3, 4])
def test_F_dehomogenizes_and_bihomogenizes(m):
    F = F_homogeneous(m)
    assert F.dehomogenize(("u", "w")).in_vars(("x", "y", "z")) == three_family_model(m)
    bh = three_family_model(m).bihomogenize([(("x", "y"), "u"), (("z",), "w")])
    assert bh.in_vars(FV) == F
    assert F.group_degrees(("x", "y", "u")) == {2}
    assert len(F.group_degrees(("z", "w"))) == 1


@pytest.mark.parametrize("m", [-4, -3, -2, 1, 2, 3, 4])
def test_partials_and_euler_relations(m):
    F = F_homogeneous(m)
    P = F_partials(m)
    for v in FV:
        assert P[v] == F.partial(v)
    (d,) = F.group_degrees(("z", "w"))
    assert x * P["x"] + y * P["y"] + u * P["u"] == 2 * F
    assert z * P["z"] + w * P["w"] == d * F


def test_F_matches_direct_formula_m1():
    # T_1 = z, T_0 = 1
    K = x * y * z * w + 4 * u * u * w * w - x * x * w * w - y * y * w * w - u * u * z * z
    expected = ((x * y * w - u * u * z) * w * w + K * z) * 1 - u * u * w * w * z
    assert F_homogeneous(1) == expected
    assert F_partials(1)["x"] == (y * w * w + (y * z - 2 * x * w) * z) * w


# singular points


def test_singular_m1():
    s = singular_points(1)
    assert s.count == 4
    tags = [p.tag for p in s.points]
    assert tags.count("infinity_pair") == 2
    minus = next(p for p in s.points if p.tag == "Sminus_root")
    plus = next(p for p in s.points if p.tag == "Splus_root")
    assert minus.xyu == (1, 1, 0) and minus.ring.modulus_poly() == cheb_S(1) - 1
    assert plus.xyu == (1, -1, 0) and plus.ring.modulus_poly() == cheb_S(1) + 1


def test_singular_m2_structure():
    s = singular_points(2)
    assert s.count == 8
    by_tag = {}
    for p in s.points:
        by_tag[p.tag] = by_tag.get(p.tag, 0) + p.multiplicity
    assert by_tag == {"infinity_pair": 2, "Sm1_root_pair": 2, "Sminus_root": 2, "Splus_root": 2}
    zz = polyvars("z")[0]
    mods = {p.tag: p.ring.modulus_poly() for p in s.points if p.ring is not None}
    assert mods["Sm1_root_pair"] == zz
    assert mods["Sminus_root"] == zz * zz - zz - 1
    assert mods["Splus_root"] == zz * zz + zz - 1


@pytest.mark.parametrize("m,count", [(1, 4), (2, 8), (3, 12), (4, 16), (-2, 6), (-3, 10), (-4, 14)])
def test_singular_counts(m, count):
    assert singular_points(m).count == count


@pytest.mark.parametrize("m", [1, 2, 3, -2, -3])
def test_singular_numeric_crosscheck(m):
    assert singular_search_crosscheck(m, 1e-7)["count"] == singular_points(m).count


@pytest.mark.parametrize("m", [1, 2, 3, -2, -3])
def test_wrong_sign_family_is_not_singular(m):
    # the (1:1:0) direction over roots of S_m + S_{m-1} is a smooth point of the surface
    F = F_homogeneous(m)
    ring = QuotientRing(family_poly("SplusRoots", m), "z")
    p = ProjectivePoint((1, 1, 0), (ring.gen(), 1), ring)
    system = [F] + [F.partial(v) for v in FV]
    assert not all(_vanishes(q, p) for q in system)


def test_degenerate_m_rejected():
    for m in (0, -1):
        with pytest.raises(InvalidParams):
            singular_points(m)


# fibers


@pytest.mark.parametrize("m", SURFACE_MS)
def test_fiber_classes(m):
    rep = degenerate_fibers(m)
    assert [f["base"] for f in rep.fibers] == ["infinity", "Sroots", "S3m", "SminusRoots", "SplusRoots"]
    assert all(f["verified"] for f in rep.fibers)
    s3m = next(f for f in rep.fibers if f["base"] == "S3m")
    assert s3m["n_fibers"] == abs(cheb_S(3 * m).degree())


def test_fiber_m1_examples():
    rep = degenerate_fibers(1)
    s3 = next(f for f in rep.fibers if f["base"] == "S3m")
    assert MultiPoly.from_json(s3["modulus"]) == cheb_S(3)
    minus = next(f for f in rep.fibers if f["base"] == "SminusRoots")
    assert MultiPoly.from_json(minus["modulus"]) == cheb_S(1) - 1


# blow-ups


@pytest.mark.parametrize("m", [v for v in range(-6, 7) if v not in (-1, 0)])
def test_blowup_arithmetic(m):
    rep = euler_blowup(m)
    assert rep.N == rep.chi + rep.n_sing - 4
    assert rep.N == (9 * m if m >= 1 else -(6 + 9 * m))


def test_blowup_examples():
    assert euler_blowup(1).to_json() == {"m": 1, "chi": 9, "n_sing": 4, "N": 9, "N_p2": 10}
    r2 = euler_blowup(2)
    assert (r2.chi, r2.n_sing, r2.N) == (14, 8, 18)
    rm2 = euler_blowup(-2)
    assert (rm2.chi, rm2.n_sing, rm2.N) == (10, 6, 12)


# smoothness


@pytest.mark.parametrize("k,l", [(3, 5), (5, 7), (3, -5), (-5, 7), (5, -7), (7, 9), (-9, -7)])
def test_critical_values_disjoint(k, l):
    rep = smoothness_check(k, l)
    assert rep["passed"]
    assert rep["critical_value_gap"] > 1e-7


def test_critical_value_example_n2():
    rep = critical_value_bound(2)
    assert rep["n_critical"] == 2
    assert rep["min_abs_h"] == pytest.approx(2.0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, -2, -3, -4, -5])
def test_critical_value_bounds(n):
    assert critical_value_bound(n)["passed"]


@pytest.mark.parametrize("l", [5, 7, 9, -5, -7])
def test_extra_component_smooth(l):
    rep = smoothness_check(l, l)
    assert rep["gradient_min"] > 1e-7


def test_suspect_singularity_detected():
    # a node at the origin is caught by the gradient scan
    from charvar.geometry import _gradient_min

    t, zz = polyvars("t z")
    with pytest.raises(SuspectSingularity):
        _gradient_min(t * t - zz * zz, [0.0], [0.0], 1e-7, "node")

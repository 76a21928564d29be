"""Invariants of the curves C(k, l) and the J(3, 2m+1) surface model.

The surface is the zero set S of a bihomogeneous polynomial F(x, y, u; z, w)
in P^2 x P^1, of degree 2 in (x, y, u).  Over a fixed (z : w), F is a conic
in (x : y : u), so S is a conic bundle.  Singular points and degenerate
fibers are certified exactly: algebraic z-values live in Q[z]/(g) for the
squarefree Chebyshev factor g, so "vanishes at every root of g" becomes
"is zero in the quotient ring".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import CC, MultiPoly, QuotientRing, from_univariate, poly_eval, squarefree_part, univariate_coeffs
from .chebyshev import cheb_degree, cheb_derived, cheb_eval, cheb_roots, cheb_S, cheb_T, family_poly
from .errors import (
    CertificateFailure,
    ClosedFormMismatch,
    ConsistencyFailure,
    CountMismatch,
    EmptyFamily,
    FiberMismatch,
    InvalidParams,
    SuspectSingularity,
)
from .variety import LinkParams, curve_poly, diagonal_split, three_family_model

__all__ = [
    "InvariantReport",
    "invariants",
    "F_homogeneous",
    "F_partials",
    "ProjectivePoint",
    "SingularSet",
    "singular_points",
    "singular_search_crosscheck",
    "FiberReport",
    "degenerate_fibers",
    "BlowupReport",
    "euler_blowup",
    "smoothness_check",
    "critical_value_bound",
]

FV = ("x", "y", "u", "z", "w")
XYU = ("x", "y", "u")


# ---------------------------------------------------------------------------
# curve invariants


@dataclass
class InvariantReport:
    k: int
    l: int
    bidegree: tuple[int, int]
    components: list[dict]
    deg_irrationality: int

    def to_json(self):
        return {
            "k": self.k,
            "l": self.l,
            "bidegree": list(self.bidegree),
            "components": self.components,
            "deg_irrationality": self.deg_irrationality,
        }


def _half(v):
    return abs(v) // 2


def invariants(k: int, l: int) -> InvariantReport:
    """Bidegree, genus and gonality from closed forms, checked against the curve polynomial.

    The bidegree is reported as (floor|k|/2, floor|l|/2); in C(k,l) these are
    the degrees in z and in t respectively.
    """
    p = LinkParams(k, l).require_hyperbolic()
    a, b = _half(k), _half(l)
    curve = curve_poly(k, l)
    if (curve.degree("z"), curve.degree("t")) != (a, b):
        raise ConsistencyFailure(
            f"C({k},{l}) has degrees (z={curve.degree('z')}, t={curve.degree('t')}), expected ({a},{b})"
        )
    if k != l:
        comps = [_component("canonical", a, b)]
        return InvariantReport(k, l, (a, b), comps, min(a, b))
    c0, c1 = diagonal_split(l)
    comps = [_component("canonical", c0.degree("z"), c0.degree("t"))]
    if c1 is not None:
        da, db = c1.degree("z"), c1.degree("t")
        if (da, db) != (b - 1, b - 1):
            raise ConsistencyFailure(f"C1({l},{l}) has bidegree ({da},{db}), expected ({b - 1},{b - 1})")
        extra = _component("extra", da, db)
        if extra["genus"] != (b - 2) ** 2 or extra["gonality"] != b - 1:
            raise ConsistencyFailure(f"C1({l},{l}) invariants disagree with closed forms")
        comps.append(extra)
    if comps[0]["genus"] != 0 or comps[0]["gonality"] != 1:
        raise ConsistencyFailure("diagonal component must be rational")
    return InvariantReport(k, l, (a, b), comps, 1)


def _component(label, a, b):
    # smooth curve of bidegree (a, b) on P1 x P1
    return {"label": label, "bidegree": [a, b], "genus": (a - 1) * (b - 1), "gonality": min(a, b)}


# ---------------------------------------------------------------------------
# Laurent polynomials in w, for closed forms that carry w^{2m} with m < 0


class _WLaurent:
    """P * w^(-s) with P a polynomial over FV."""

    __slots__ = ("P", "s")

    def __init__(self, P, s=0):
        self.P = P if isinstance(P, MultiPoly) else MultiPoly.const(P, FV)
        self.P = self.P.in_vars(FV)
        self.s = s

    @staticmethod
    def wpow(e):
        w = MultiPoly.var("w", FV)
        return _WLaurent(w ** e, 0) if e >= 0 else _WLaurent(MultiPoly.const(1, FV), -e)

    def _at(self, s):
        return self.P.scale_monomial((0, 0, 0, 0, s - self.s))

    def _lift(self, o):
        return o if isinstance(o, _WLaurent) else _WLaurent(o)

    def __add__(self, o):
        o = self._lift(o)
        s = max(self.s, o.s)
        return _WLaurent(self._at(s) + o._at(s), s)

    __radd__ = __add__

    def __neg__(self):
        return _WLaurent(-self.P, self.s)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return _WLaurent(self.P * o.P, self.s + o.s)

    __rmul__ = __mul__

    def partial(self, var):
        if var != "w":
            return _WLaurent(self.P.partial(var), self.s)
        w = MultiPoly.var("w", FV)
        return _WLaurent(w * self.P.partial("w") - self.s * self.P, self.s + 1)

    def __eq__(self, o):
        o = self._lift(o)
        s = max(self.s, o.s)
        return self._at(s) == o._at(s)

    def normalized(self):
        """(F, c) with F = w^c * self a polynomial not divisible by w."""
        if self.P.is_zero():
            return self.P, 0
        i = FV.index("w")
        r = min(e[i] for e in self.P.terms)
        return self.P.scale_monomial((0, 0, 0, 0, -r)) if r else self.P, self.s - r


def _T(j):
    """w^j S_j(z/w) as a Laurent polynomial (T_{-1} = 0)."""
    d = cheb_degree(j)
    if d < 0:
        return _WLaurent(0)
    # w^j * S_j(z/w) = T^hom_j * w^(j - d), where T^hom_j has degree d
    return _WLaurent(cheb_T(j).in_vars(FV)) * _WLaurent.wpow(j - d)


def _closed_forms(m):
    x, y, u, z, w = (_WLaurent(MultiPoly.var(v, FV)) for v in FV)
    W2m = _WLaurent.wpow(2 * m)
    W2m1 = _WLaurent.wpow(2 * m - 1)
    Tm, Tm1 = _T(m), _T(m - 1)
    TT = Tm * Tm1
    K = x * y * z * w + 4 * u * u * w * w - x * x * w * w - y * y * w * w - u * u * z * z
    A = (x * y * w - u * u * z) * W2m + K * TT
    F = A * Tm1 - u * u * W2m * Tm
    forms = {
        "x": (y * W2m + (y * z - 2 * x * w) * TT) * w * Tm1,
        "y": (x * W2m + (x * z - 2 * y * w) * TT) * w * Tm1,
        "u": -2 * u * ((z * W2m + (z * z - 4 * w * w) * TT) * Tm1 + W2m * Tm),
        "z": (-u * u * W2m + (x * y * w - 2 * u * u * z) * TT + K * TT.partial("z")) * Tm1
        + A * Tm1.partial("z")
        - u * u * W2m * Tm.partial("z"),
        "w": (
            (2 * m + 1) * x * y * W2m
            - 2 * m * u * u * z * W2m1
            + (x * y * z + 8 * u * u * w - 2 * x * x * w - 2 * y * y * w) * TT
            + K * TT.partial("w")
        )
        * Tm1
        + A * Tm1.partial("w")
        - u * u * (2 * m * W2m1 * Tm + W2m * Tm.partial("w")),
    }
    return F, forms


def F_homogeneous(m: int) -> MultiPoly:
    """Bihomogeneous model of J(3, 2m+1) in (x, y, u; z, w), degree 2 in (x, y, u).

    m in {0, -1} is accepted but degenerate: the model is not a surface.
    """
    F_L, _ = _closed_forms(m)
    F, _ = F_L.normalized()
    affine = three_family_model(m)
    if F.dehomogenize(("u", "w")).in_vars(("x", "y", "z")) != affine:
        raise ClosedFormMismatch(f"F(m={m}) does not dehomogenize to the affine model")
    if F.group_degrees(XYU) != {2}:
        raise ClosedFormMismatch(f"F(m={m}) is not of degree 2 in (x, y, u)")
    if len(F.group_degrees(("z", "w"))) != 1:
        raise ClosedFormMismatch(f"F(m={m}) is not homogeneous in (z, w)")
    return F


def F_partials(m: int) -> dict:
    """Partials of ``F_homogeneous(m)``, each matched against its closed form."""
    F_L, forms = _closed_forms(m)
    for v in FV:
        if not forms[v] == F_L.partial(v):
            raise ClosedFormMismatch(f"closed-form partial F_{v} disagrees for m={m}")
    F, _ = F_L.normalized()
    return {v: F.partial(v) for v in FV}


# ---------------------------------------------------------------------------
# singular points


@dataclass
class ProjectivePoint:
    """(x : y : u, z : w); z may be the generator of a quotient ring."""

    xyu: tuple
    zw: tuple
    ring: object = None
    tag: str = ""
    multiplicity: int = 1

    def assignment(self):
        x, y, u = self.xyu
        z, w = self.zw
        return {"x": x, "y": y, "u": u, "z": z, "w": w}

    def to_json(self):
        z, w = self.zw
        return {
            "xyu": [str(c) for c in self.xyu],
            "zw": ["z" if self.ring is not None else str(z), str(w)],
            "modulus": None if self.ring is None else self.ring.modulus_poly().to_json(),
            "tag": self.tag,
            "multiplicity": self.multiplicity,
        }


def _canonical_xyu(v):
    v = tuple(Fraction(c) for c in v)
    lead = next(c for c in v if c)
    return tuple(c / lead for c in v)


@dataclass
class SingularSet:
    m: int
    points: list[ProjectivePoint]
    count: int

    def to_json(self):
        return {"m": self.m, "count": self.count, "points": [p.to_json() for p in self.points]}


def expected_singular_count(m):
    _require_surface(m)
    return 4 * m if m >= 1 else -(2 + 4 * m)


def _require_surface(m):
    if m in (0, -1):
        raise InvalidParams(f"m={m} is degenerate; need m >= 1 or m <= -2")


def _root_ring(poly):
    if poly.degree() <= 0:
        return None
    return QuotientRing(squarefree_part(poly, "z"), "z")


def _vanishes(poly, point):
    """Exact zero test of ``poly`` at ``point``."""
    x, y, u = point.xyu
    z, w = point.zw
    if point.ring is None:
        return poly.specialize({"x": x, "y": y, "u": u, "z": z, "w": w}).is_zero()
    rest = poly.specialize({"x": x, "y": y, "u": u, "w": w})
    return point.ring.from_poly(rest.in_vars(("z",))).is_zero()


def singular_points(m: int) -> SingularSet:
    """List the singular points of F and certify each exactly."""
    _require_surface(m)
    F = F_homogeneous(m)
    system = [F] + [F.partial(v) for v in FV]
    pts = [
        ProjectivePoint((1, 0, 0), (1, 0), None, "infinity_pair"),
        ProjectivePoint((0, 1, 0), (1, 0), None, "infinity_pair"),
    ]
    for tag, kind, xyus in (
        ("Sm1_root_pair", "Sroots", [(1, 0, 0), (0, 1, 0)]),
        ("Sminus_root", "SminusRoots", [(1, 1, 0)]),
        ("Splus_root", "SplusRoots", [(1, -1, 0)]),
    ):
        ring = _root_ring(family_poly(kind, m))
        if ring is None:
            continue
        for v in xyus:
            pts.append(ProjectivePoint(_canonical_xyu(v), (ring.gen(), 1), ring, tag, ring.degree))
    for p in pts:
        for i, poly in enumerate(system):
            if not _vanishes(poly, p):
                name = "F" if i == 0 else f"F_{FV[i - 1]}"
                raise CertificateFailure(f"{name} does not vanish at {p.to_json()}")
    count = sum(p.multiplicity for p in pts)
    if count != expected_singular_count(m):
        raise CountMismatch(f"m={m}: {count} singular points, expected {expected_singular_count(m)}")
    return SingularSet(m, pts, count)


# numeric search, independent of the listed points


def _quadratic_form(F):
    """Symmetric matrix Q(z, w) of polynomials with F = v^T Q v, scaled by 2."""
    coeffs = F.collect(XYU)
    Q = [[MultiPoly.const(0, ("z", "w")) for _ in range(3)] for _ in range(3)]
    for e, c in coeffs.items():
        c = c.in_vars(("z", "w"))
        idx = [i for i in range(3) for _ in range(e[i])]
        i, j = idx
        if i == j:
            Q[i][i] = Q[i][i] + 2 * c
        else:
            Q[i][j] = Q[i][j] + c
            Q[j][i] = Q[j][i] + c
    return Q


def _det3(Q):
    (a, b, c), (d, e, f), (g, h, i) = Q
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _numeric(Qp, z, w):
    return np.array([[complex(poly_eval(q, {"z": z, "w": w}, CC)) for q in row] for row in Qp])


def _kernel(M, tol):
    _, s, vh = np.linalg.svd(M)
    scale = max(1.0, s[0])
    return [vh[i].conj() for i in range(3) if s[i] < tol * scale]


def _binary_roots(q0, q1, q2, tol):
    """Projective roots (a:b) of q0 a^2 + q1 ab + q2 b^2."""
    scale = max(abs(q0), abs(q1), abs(q2))
    if scale < tol:
        return None
    if abs(q0) < tol * scale:
        roots = [(1.0, 0.0)]
        if abs(q1) >= tol * scale:
            roots.append((-q2 / q1, 1.0))
        return roots
    return [(r, 1.0) for r in np.roots([q0, q1, q2])]


def _normalize_vec(v):
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    i = next(i for i in range(3) if abs(v[i]) > 1e-6)
    return v / v[i]


def singular_search_crosscheck(m: int, tol: float = 1e-7) -> dict:
    """Find singular points numerically and compare with ``singular_points``.

    Singular points of a conic bundle sit in degenerate fibers, so the
    search runs over the roots of det Q(z, w) plus the fiber at infinity.
    In each such fiber the gradient in (x, y, u) vanishes exactly on ker Q;
    on the kernel we solve F_z = F_w = 0.
    """
    _require_surface(m)
    F = F_homogeneous(m)
    Fz, Fw = F.partial("z"), F.partial("w")
    Q = _quadratic_form(F)
    det = _det3(Q)
    if det.is_zero():
        raise CountMismatch("every fiber is degenerate; search does not apply")
    bases = []
    if det.specialize({"z": 1, "w": 0}).is_zero():
        bases.append((1.0, 0.0))
    affine = det.specialize({"w": 1}).in_vars(("z",))
    if affine.degree() > 0:
        sq = univariate_coeffs(squarefree_part(affine, "z"), "z")
        for r in np.roots([float(c) for c in reversed(sq)]):
            bases.append((complex(r), 1.0))

    found = []
    for z0, w0 in bases:
        M = _numeric(Q, z0, w0)
        ker = _kernel(M, tol)
        cand = []
        if len(ker) == 1:
            cand = [ker[0]]
        elif len(ker) == 2:
            k1, k2 = ker
            qs = []
            for P in (Fz, Fw):
                f = lambda a, b: complex(
                    poly_eval(P, dict(zip(XYU, a * k1 + b * k2)) | {"z": z0, "w": w0}, CC)
                )
                q0, q2 = f(1, 0), f(0, 1)
                qs.append((q0, f(1, 1) - q0 - q2, q2))
            roots = _binary_roots(*qs[0], tol) or _binary_roots(*qs[1], tol)
            if roots is None:
                raise CountMismatch(f"a whole line of singular points over z={z0}")
            cand = [a * k1 + b * k2 for a, b in roots]
        elif len(ker) == 3:
            raise CountMismatch(f"fiber over z={z0} is the whole plane")
        for v in cand:
            v = _normalize_vec(v)
            pt = dict(zip(XYU, v)) | {"z": z0, "w": w0}
            vals = [abs(complex(poly_eval(P, pt, CC))) for P in (F, Fz, Fw)]
            vals += [abs(c) for c in M @ v]
            if max(vals) < tol * max(1.0, float(np.abs(M).max())):
                found.append((v, complex(z0), complex(w0)))

    clusters = []
    for v, z0, w0 in found:
        if not any(
            np.allclose(v, cv, atol=1e-5) and abs(z0 - cz) < 1e-5 and abs(w0 - cw) < 1e-5
            for cv, cz, cw in clusters
        ):
            clusters.append((v, z0, w0))
    listed = singular_points(m)
    if len(clusters) != listed.count:
        raise CountMismatch(f"m={m}: numeric search found {len(clusters)}, certificates list {listed.count}")
    return {
        "m": m,
        "count": len(clusters),
        "points": [
            {"xyu": [[c.real, c.imag] for c in v], "z": [z.real, z.imag], "w": w.real} for v, z, w in clusters
        ],
    }


# ---------------------------------------------------------------------------
# degenerate fibers


@dataclass
class FiberReport:
    m: int
    fibers: list[dict] = field(default_factory=list)

    def to_json(self):
        return {"m": self.m, "fibers": self.fibers}


def _reduce_fiber(poly, ring):
    """Coefficients in (x, y, u) of ``poly`` at w = 1, reduced into ``ring`` (or Q at infinity)."""
    if ring is None:
        at = {v: c for v, c in (("z", 1), ("w", 0)) if v in poly.vars}
        coeffs = poly.specialize(at).in_vars(XYU).collect(XYU)
        return {e: Fraction(c.constant_value()) for e, c in coeffs.items()}
    rest = poly.specialize({"w": 1}) if "w" in poly.vars else poly
    out = {}
    for e, c in rest.collect(XYU).items():
        r = ring.from_poly(c.in_vars(("z",)))
        if not r.is_zero():
            out[e] = r
    return out


def _unit_multiple(F_red, fib_red, ring):
    """Return c with F_red == c * fib_red and c a unit, else None."""
    if not fib_red:
        return None
    e0 = next(iter(fib_red))
    if ring is None:
        c = F_red.get(e0, 0) / fib_red[e0]
        unit = c != 0
        mult = lambda a: c * a
    else:
        lead = fib_red[e0]
        if not lead.is_unit():
            return None
        c = F_red.get(e0, ring.zero) * lead.inverse()
        unit = c.is_unit()
        mult = lambda a: c * a
    if not unit:
        return None
    for e in set(F_red) | set(fib_red):
        zero = 0 if ring is None else ring.zero
        if F_red.get(e, zero) != mult(fib_red.get(e, zero)):
            return None
    return c


def degenerate_fibers(m: int) -> FiberReport:
    """Verify the five degenerate-fiber classes of the projection (x:y:u, z:w) -> (z:w)."""
    _require_surface(m)
    F = F_homogeneous(m)
    ctx = ("x", "y", "u", "z")
    x, y, u, z = (MultiPoly.var(v, ctx) for v in ctx)
    Sm, Sm1 = cheb_S(m).in_vars(ctx), cheb_S(m - 1).in_vars(ctx)
    classes = [
        ("infinity", "double_line_u2", None, u * u),
        ("Sroots", "double_line_u2", family_poly("Sroots", m), u * u),
        ("S3m", "conic_split_lines", cheb_S(3 * m), (x * Sm - y * Sm1) * (y * Sm - x * Sm1)),
        ("SminusRoots", "conic_smooth_minus", family_poly("SminusRoots", m), (x - y) ** 2 - (2 - z) * u * u),
        ("SplusRoots", "conic_smooth_plus", family_poly("SplusRoots", m), (x + y) ** 2 - (2 + z) * u * u),
    ]
    report = FiberReport(m)
    for base, ftype, gpoly, fiber in classes:
        entry = {"base": base, "fiber_type": ftype, "fiber_poly": fiber.to_json()}
        if base == "infinity":
            ring = None
            entry["n_fibers"] = 1
        else:
            ring = _root_ring(gpoly)
            entry["modulus"] = None if ring is None else ring.modulus_poly().to_json()
            entry["n_fibers"] = 0 if ring is None else ring.degree
            if ring is None:
                entry["verified"] = True
                entry["unit"] = None
                report.fibers.append(entry)
                continue
        c = _unit_multiple(_reduce_fiber(F, ring), _reduce_fiber(fiber, ring), ring)
        if c is None:
            raise FiberMismatch(f"m={m}: fiber over {base} is not a unit multiple of {fiber}")
        entry["unit"] = str(c if ring is None else c.residue)
        entry["verified"] = True
        report.fibers.append(entry)
    return report


# ---------------------------------------------------------------------------
# Euler characteristic and blow-ups


@dataclass
class BlowupReport:
    m: int
    chi: int
    n_sing: int
    N: int
    N_p2: int

    def to_json(self):
        return {"m": self.m, "chi": self.chi, "n_sing": self.n_sing, "N": self.N, "N_p2": self.N_p2}


def euler_blowup(m: int) -> BlowupReport:
    """chi(S), singular count and the number of one-point blow-ups from P1 x P1 (and from P2)."""
    _require_surface(m)
    chi = 4 + 5 * m if m >= 1 else -5 * m
    n_sing = singular_points(m).count
    N = chi + n_sing - 4
    closed = 9 * m if m >= 1 else -(6 + 9 * m)
    closed_p2 = 1 + 9 * m if m >= 1 else -(5 + 9 * m)
    if N != closed or N + 1 != closed_p2:
        raise ConsistencyFailure(f"m={m}: N={N} but closed form gives {closed}")
    return BlowupReport(m, chi, n_sing, N, N + 1)


# ---------------------------------------------------------------------------
# smoothness spot checks


def _float_roots(poly):
    if poly.degree() <= 0:
        return []
    coeffs = univariate_coeffs(poly, "z")
    return [complex(r) for r in np.roots([float(c) for c in reversed(coeffs)])]


def critical_points(j: int, tol: float = 1e-7):
    """Roots of Delta_j, computed directly and via S_{2j}(w) = 2j+1 with w = +-2 removed."""
    direct = _float_roots(cheb_derived("Delta", j))
    alt = _float_roots(cheb_S(2 * j) - (2 * j + 1))
    for target in (2.0, -2.0):
        if alt:
            i = min(range(len(alt)), key=lambda i: abs(alt[i] - target))
            if abs(alt[i] - target) < 1e-6:
                alt.pop(i)
    if len(alt) != len(direct) or any(min(abs(a - d) for d in direct) > 1e-6 for a in alt):
        raise ConsistencyFailure(f"critical points of h_{j} disagree between the two routes")
    return direct


def _h(j, w):
    return cheb_eval(j, w) / cheb_eval(j - 1, w)


def critical_value_bound(j: int, tol: float = 1e-7) -> dict:
    """|h_j| at the critical points of h_j: above 1 for j > 0, below 1 for j < 0."""
    crit = critical_points(j, tol)
    mags = [abs(_h(j, w)) for w in crit]
    ok = all(v > 1 + tol for v in mags) if j > 0 else all(v < 1 - tol for v in mags)
    return {"j": j, "n_critical": len(crit), "min_abs_h": min(mags, default=None),
            "max_abs_h": max(mags, default=None), "passed": ok}


def smoothness_check(k: int, l: int, tol: float = 1e-7) -> dict:
    """Numeric evidence that the affine part of C(k, l) (or of C1(l, l)) has no singular point."""
    p = LinkParams(k, l).require_hyperbolic()
    m, n = p.m, p.n
    report = {"k": k, "l": l, "tol": tol}
    curve = curve_poly(k, l)
    if k != l:
        ct, cz = critical_points(n, tol), critical_points(m, tol)
        ht = [_h(n, t0) for t0 in ct]
        hz = [_h(m, z0) for z0 in cz]
        gap = min((abs(a - b) for a in ht for b in hz), default=math.inf)
        report["critical_value_gap"] = gap
        if gap < tol:
            raise SuspectSingularity(f"C({k},{l}): critical values within {gap:.3g}", gap)
        report["bounds"] = [critical_value_bound(n, tol), critical_value_bound(m, tol)]
        # direct gradient test at every pair of candidate points
        cand_t = ct + _float_roots(cheb_S(n - 1))
        cand_z = cz + _float_roots(cheb_S(m - 1))
        report["gradient_min"] = _gradient_min(curve, cand_t, cand_z, tol, f"C({k},{l})")
        report["passed"] = True
        return report
    if abs(l) == 3:
        report["components"] = ["t - z"]
        report["passed"] = True
        return report
    _, G = diagonal_split(l)
    crit = critical_points(n, tol)
    cand = crit + _float_roots(cheb_S(n - 1))
    report["gradient_min"] = _gradient_min(G, cand, cand, tol, f"C1({l},{l})")
    report["passed"] = True
    return report


def _gradient_min(poly, cand_t, cand_z, tol, label):
    if not cand_t or not cand_z:
        return None
    parts = (poly, poly.partial("t"), poly.partial("z"))
    best = math.inf
    for t0 in cand_t:
        for z0 in cand_z:
            val = max(abs(complex(poly_eval(q, {"t": t0, "z": z0}, CC))) for q in parts)
            best = min(best, val)
    if best < tol:
        raise SuspectSingularity(f"{label}: system nearly vanishes ({best:.3g})", best)
    return best

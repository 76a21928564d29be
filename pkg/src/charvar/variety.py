"""Character-variety models of the two-component double twist links J(k, l).

Coordinates are x = tr(a), y = tr(b), z = tr(ab^-1); with k = 2m+1 and
l = 2n+1 the relevant polynomials are

    kappa = xyz + 4 - x^2 - y^2 - z^2          (reducible characters)
    t     = P_{w_k}(x, y, z)                    (trace of w_k)
    C(k,l) = S_n(t) S_{m-1}(z) - S_{n-1}(t) S_m(z)

and the full defining polynomial factors as kappa * C(k,l)|_{t = t(x,y,z)}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import QQ, MultiPoly, polyvars
from .chebyshev import cheb_eval, cheb_S
from .errors import ConsistencyFailure, ExceptionalLocus, InvalidParams, NonHyperbolic, NotDivisible

__all__ = [
    "LinkParams",
    "t_poly",
    "t_poly_simplified",
    "reducible_poly",
    "curve_poly",
    "natural_model",
    "three_family_model",
    "u_model",
    "w_model",
    "VarietyModel",
    "build_model",
    "AffinePoint",
    "map_V_to_U",
    "map_U_to_V",
    "map_U_to_W",
    "map_W_to_U",
    "diagonal_split",
    "birational_roundtrip",
]

XYZ = ("x", "y", "z")
TZ = ("t", "z")


@dataclass(frozen=True)
class LinkParams:
    k: int
    l: int

    def __post_init__(self):
        for name, v in (("k", self.k), ("l", self.l)):
            if not isinstance(v, int) or isinstance(v, bool) or v % 2 == 0:
                raise InvalidParams(f"{name}={v!r} must be an odd integer")

    @property
    def m(self):
        return (self.k - 1) // 2

    @property
    def n(self):
        return (self.l - 1) // 2

    @property
    def hyperbolic(self):
        return abs(self.k) > 1 and abs(self.l) > 1

    def require_hyperbolic(self):
        if not self.hyperbolic:
            raise NonHyperbolic(f"J({self.k},{self.l}) is a torus link (|k| or |l| is 1)")
        return self


def _S(j, ctx=XYZ):
    return cheb_S(j, "z").in_vars(ctx)


def t_poly(m: int) -> MultiPoly:
    """(x S_m - y S_{m-1})(y S_m - x S_{m-1}) - z (S_m^2 + S_{m-1}^2) + 4 S_m S_{m-1}."""
    x, y, z = polyvars("x y z")
    sm, sm1 = _S(m), _S(m - 1)
    return (x * sm - y * sm1) * (y * sm - x * sm1) - z * (sm * sm + sm1 * sm1) + 4 * sm * sm1


def reducible_poly() -> MultiPoly:
    x, y, z = polyvars("x y z")
    return x * y * z + 4 - x * x - y * y - z * z


def t_poly_simplified(m: int) -> MultiPoly:
    """xy - z + kappa S_m S_{m-1}; equal to ``t_poly`` by the unit Chebyshev identity."""
    x, y, z = polyvars("x y z")
    return x * y - z + reducible_poly() * _S(m) * _S(m - 1)


def curve_poly(k: int, l: int) -> MultiPoly:
    """S_n(t) S_{m-1}(z) - S_{n-1}(t) S_m(z) in variables (t, z)."""
    p = LinkParams(k, l)
    St = lambda j: cheb_S(j, "t").in_vars(TZ)
    Sz = lambda j: cheb_S(j, "z").in_vars(TZ)
    return St(p.n) * Sz(p.m - 1) - St(p.n - 1) * Sz(p.m)


def natural_model(k: int, l: int) -> MultiPoly:
    """The curve polynomial with t replaced by the trace polynomial of w_k."""
    p = LinkParams(k, l)
    return curve_poly(k, l).subs("t", t_poly(p.m)).in_vars(XYZ)


def three_family_model(m: int) -> MultiPoly:
    """t S_{m-1}(z) - S_m(z) with t = t_poly(m): the J(2m+1, 3) = J(3, 2m+1) model."""
    return t_poly(m) * _S(m - 1) - _S(m)


def u_model(k: int, l: int) -> MultiPoly:
    """Curve polynomial with t = uv - z(S_m^2 + S_{m-1}^2) + 4 S_m S_{m-1}, in (u, v, z)."""
    p = LinkParams(k, l)
    ctx = ("u", "v", "z")
    u, v, z = polyvars("u v z")
    sm, sm1 = _S(p.m, ctx), _S(p.m - 1, ctx)
    t = u * v - z * (sm * sm + sm1 * sm1) + 4 * sm * sm1
    return curve_poly(k, l).subs("t", t).in_vars(ctx)


def w_model(k: int, l: int) -> MultiPoly:
    """The curve polynomial viewed in (t, v, z); v does not occur."""
    return curve_poly(k, l).in_vars(("t", "v", "z"))


@dataclass
class VarietyModel:
    params: LinkParams
    reducible: MultiPoly
    curve: MultiPoly
    irr_model: MultiPoly
    components: list = field(default_factory=list)

    def to_json(self):
        return {
            "k": self.params.k,
            "l": self.params.l,
            "m": self.params.m,
            "n": self.params.n,
            "hyperbolic": self.params.hyperbolic,
            "reducible": self.reducible.to_json(),
            "curve": self.curve.to_json(),
            "irr_model": self.irr_model.to_json(),
            "components": [{"label": lab, "poly": c.to_json()} for lab, c in self.components],
        }


def build_model(k: int, l: int) -> VarietyModel:
    p = LinkParams(k, l)
    curve = curve_poly(k, l)
    if k == l and abs(l) > 1:
        c0, c1 = diagonal_split(l)
        comps = [("canonical", c0)] + ([("extra", c1)] if c1 is not None else [])
    else:
        comps = [("canonical", curve)]
    return VarietyModel(p, reducible_poly(), curve, natural_model(k, l), comps)


# ---------------------------------------------------------------------------
# birational maps, evaluated pointwise


@dataclass(frozen=True)
class AffinePoint:
    coords: dict
    ring: object = QQ

    def __getitem__(self, v):
        return self.coords[v]


def _cheb_pair(m, z):
    return cheb_eval(m, z), cheb_eval(m - 1, z)


def map_V_to_U(pt: AffinePoint, m: int) -> AffinePoint:
    """(x, y, z) -> (x S_m - y S_{m-1}, y S_m - x S_{m-1}, z); defined everywhere."""
    x, y, z = pt["x"], pt["y"], pt["z"]
    sm, sm1 = _cheb_pair(m, z)
    return AffinePoint({"u": x * sm - y * sm1, "v": y * sm - x * sm1, "z": z}, pt.ring)


def map_U_to_V(pt: AffinePoint, m: int) -> AffinePoint:
    """Inverse of ``map_V_to_U``; undefined where S_{2m}(z) = S_m^2 - S_{m-1}^2 vanishes."""
    u, v, z = pt["u"], pt["v"], pt["z"]
    sm, sm1 = _cheb_pair(m, z)
    den = sm * sm - sm1 * sm1
    if den == 0:
        raise ExceptionalLocus(f"S_{2 * m}(z) vanishes at z={z}")
    return AffinePoint({"x": (u * sm + v * sm1) / den, "y": (v * sm + u * sm1) / den, "z": z}, pt.ring)


def map_U_to_W(pt: AffinePoint, m: int) -> AffinePoint:
    """(u, v, z) -> (uv - z(S_m^2 + S_{m-1}^2) + 4 S_m S_{m-1}, v, z)."""
    u, v, z = pt["u"], pt["v"], pt["z"]
    sm, sm1 = _cheb_pair(m, z)
    t = u * v - z * (sm * sm + sm1 * sm1) + 4 * sm * sm1
    return AffinePoint({"t": t, "v": v, "z": z}, pt.ring)


def map_W_to_U(pt: AffinePoint, m: int) -> AffinePoint:
    """Inverse of ``map_U_to_W``; undefined on v = 0."""
    t, v, z = pt["t"], pt["v"], pt["z"]
    if v == 0:
        raise ExceptionalLocus("v = 0")
    sm, sm1 = _cheb_pair(m, z)
    u = (t + z * (sm * sm + sm1 * sm1) - 4 * sm * sm1) / v
    return AffinePoint({"u": u, "v": v, "z": z}, pt.ring)


def diagonal_split(l: int):
    """Split C(l, l) into the diagonal t - z and the exact cofactor (None for |l| = 3)."""
    LinkParams(l, l)
    if abs(l) < 3:
        raise InvalidParams(f"diagonal split needs |l| >= 3, got {l}")
    t, z = polyvars("t z")
    diag = t - z
    rest = curve_poly(l, l).divide_exact(diag)
    if rest.is_constant():
        if rest.constant_value() not in (1, -1):
            raise NotDivisible(f"unexpected cofactor {rest} for l={l}")
        return diag, None
    return diag, rest


def _random_fraction(rng, bound=50):
    den = int(rng.integers(1, bound + 1))
    return Fraction(int(rng.integers(-bound * den, bound * den + 1)), den)


def birational_roundtrip(m: int, samples: int = 100, seed: int = 0) -> dict:
    """Round-trip random rational points through each birational map pair.

    Points on an exceptional locus are resampled; the report records how
    many draws were skipped.
    """
    rng = np.random.default_rng([seed, m & 0xFFFFFFFF])
    pairs = {
        "V->U->V": (("x", "y", "z"), map_V_to_U, map_U_to_V),
        "U->V->U": (("u", "v", "z"), map_U_to_V, map_V_to_U),
        "U->W->U": (("u", "v", "z"), map_U_to_W, map_W_to_U),
        "W->U->W": (("t", "v", "z"), map_W_to_U, map_U_to_W),
    }
    report = {"m": m, "samples": samples, "maps": {}}
    for name, (coords, fwd, back) in pairs.items():
        done = skipped = 0
        while done < samples:
            pt = AffinePoint({c: _random_fraction(rng) for c in coords})
            try:
                again = back(fwd(pt, m), m)
            except ExceptionalLocus:
                skipped += 1
                continue
            if again.coords != pt.coords:
                raise ConsistencyFailure(f"{name} round trip moved {pt.coords} to {again.coords}")
            done += 1
        report["maps"][name] = {"checked": done, "skipped": skipped}
    report["passed"] = True
    return report

"""Chebyshev (Fibonacci-type) polynomials S_j for every integer j.

``S_0 = 1``, ``S_1 = w`` and ``S_{j+1} = w*S_j - S_{j-1}``; running the same
recursion backwards gives the negative indices (``S_{-1} = 0``,
``S_{-2} = -1``, ...).  Also here: the bihomogenized family ``T_j(z, w)``,
the derived polynomials ``Delta_j`` and ``H_j``, closed-form root families,
and an exact identity suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import MultiPoly, univariate_coeffs
from .errors import EmptyFamily, IdentityFailure, ValidationError

__all__ = [
    "cheb_S",
    "cheb_eval",
    "cheb_T",
    "cheb_linear",
    "cheb_derived",
    "cheb_degree",
    "RootFamily",
    "cheb_roots",
    "identity_suite",
]

# var -> [S_0, S_1, ...] and var -> [S_0, S_{-1}, S_{-2}, ...]
_ASC: dict[str, list[MultiPoly]] = {}
_DESC: dict[str, list[MultiPoly]] = {}


def _seed(var):
    one = MultiPoly.const(1, (var,))
    w = MultiPoly.var(var)
    _ASC[var] = [one, w]
    _DESC[var] = [one, w * one - w]  # S_{-1} = w*S_0 - S_1


def cheb_S(j: int, var: str = "z") -> MultiPoly:
    """S_j as a polynomial in ``var``; memoized in both directions."""
    if var not in _ASC:
        _seed(var)
    w = MultiPoly.var(var)
    if j >= 0:
        seq = _ASC[var]
        while len(seq) <= j:
            seq.append(w * seq[-1] - seq[-2])
        return seq[j]
    seq = _DESC[var]
    while len(seq) <= -j:
        # S_{j-1} = w*S_j - S_{j+1}
        seq.append(w * seq[-1] - seq[-2])
    return seq[-j]


def cheb_degree(j: int) -> int:
    """Degree of S_j; -1 for the zero polynomial S_{-1}."""
    if j >= 0:
        return j
    if j == -1:
        return -1
    return -j - 2


def cheb_eval(j: int, value):
    """S_j(value) by the three-term recursion, for any ring-like value.

    Works for ints, Fractions, complex numbers, quotient-ring elements and
    polynomials alike; it never forms S_j symbolically.
    """
    prev, cur = value * 0, value * 0 + 1  # S_{-1}, S_0
    if j >= 0:
        for _ in range(j):
            prev, cur = cur, value * cur - prev
        return cur
    nxt, cur = value * 0 + 1, value * 0  # S_0, S_{-1}
    for _ in range(-j - 1):
        nxt, cur = cur, value * cur - nxt
    return cur


def cheb_T(j: int, zvar: str = "z", wvar: str = "w") -> MultiPoly:
    """Homogenized S_j in (z, w), using the degree of S_j as the degree.

    For j >= 0 this is ``w^j S_j(z/w)``; for j <= -2 it equals ``-T_{-j-2}``.
    """
    s = cheb_S(j, zvar)
    d = cheb_degree(j)
    if d < 0:
        return MultiPoly.const(0, (zvar, wvar))
    return MultiPoly((zvar, wvar), {(e, d - e): c for (e,), c in s.terms.items()})


def cheb_linear(j: int, f0, fm1, omega):
    """j-th term of the sequence f_{i+1} = omega*f_i - f_{i-1} with given f_0, f_{-1}."""
    return cheb_eval(j, omega) * f0 - cheb_eval(j - 1, omega) * fm1


def cheb_derived(kind: str, j: int, var: str = "z"):
    """``Delta`` (S_j'S_{j-1} - S_jS_{j-1}'), ``H`` (S_j''S_{j-1} - S_{j-1}''S_j), or ``h_num_den``."""
    s, sp = cheb_S(j, var), cheb_S(j - 1, var)
    if kind == "h_num_den":
        return s, sp
    if kind == "Delta":
        return s.partial(var) * sp - s * sp.partial(var)
    if kind == "H":
        return s.partial(var).partial(var) * sp - sp.partial(var).partial(var) * s
    raise ValidationError(f"unknown derived kind {kind!r}")


# ---------------------------------------------------------------------------
# roots

ROOT_KINDS = ("Sroots", "SminusRoots", "SplusRoots", "DeltaRoots")


@dataclass
class RootFamily:
    kind: str
    m: int
    roots: list[complex | float]
    # angle numerator/denominator: root = 2*cos(pi * num / den); None when not trigonometric
    angles: list[tuple[int, int] | None] = field(default_factory=list)
    residual: float = 0.0

    def __len__(self):
        return len(self.roots)

    def to_json(self):
        items = []
        for r, a in zip(self.roots, self.angles):
            r = complex(r)
            item = {"value": r.real}
            if abs(r.imag) > 0:
                item["imag"] = r.imag
            item["angle_num"], item["angle_den"] = a if a else (None, None)
            items.append(item)
        return {"kind": self.kind, "m": self.m, "roots": items}


def family_poly(kind: str, m: int, var: str = "z") -> MultiPoly:
    """The polynomial whose roots a family lists."""
    if kind == "Sroots":
        return cheb_S(m - 1, var)
    if kind == "SminusRoots":
        return cheb_S(m, var) - cheb_S(m - 1, var)
    if kind == "SplusRoots":
        return cheb_S(m, var) + cheb_S(m - 1, var)
    if kind == "DeltaRoots":
        return cheb_derived("Delta", m, var)
    raise ValidationError(f"unknown root family {kind!r}")


def _mirror(m):
    # S_m -/+ S_{m-1} for m <= -2 equals +/-(S_M -/+ S_{M-1}) with M = -m-1
    return m if m >= 0 else -m - 1


def _trig_angles(kind, m):
    if kind == "Sroots":
        j = m - 1
        big = j if j >= 0 else -j - 2
        return [(r, big + 1) for r in range(1, big + 1)]
    big = _mirror(m)
    if kind == "SminusRoots":
        return [(2 * r + 1, 2 * big + 1) for r in range(big)]
    return [(2 * r, 2 * big + 1) for r in range(1, big + 1)]


def cheb_roots(kind: str, m: int, tol: float = 1e-9) -> RootFamily:
    """Closed-form roots of a Chebyshev factor, each certified by |poly(root)| < tol."""
    poly = family_poly(kind, m)
    deg = poly.degree()
    if deg <= 0:
        raise EmptyFamily(f"{kind} for m={m} is constant")
    if kind == "DeltaRoots":
        coeffs = [float(c) for c in univariate_coeffs(poly, "z")]
        roots = [complex(r) for r in np.roots(coeffs[::-1])]
        angles = [None] * len(roots)
    else:
        angles = _trig_angles(kind, m)
        roots = [2 * math.cos(math.pi * a / b) for a, b in angles]
    if len(roots) != deg:
        raise EmptyFamily(f"{kind} for m={m}: {len(roots)} roots for degree {deg}")
    residual = max(abs(cheb_eval_poly(poly, r)) for r in roots)
    if residual >= tol:
        raise ValidationError(f"{kind} m={m}: root residual {residual:.3g} exceeds {tol}")
    return RootFamily(kind, m, roots, angles, residual)


def cheb_eval_poly(poly, value):
    coeffs = univariate_coeffs(poly, "z") if poly.used_vars() else [poly.constant_value()]
    acc = 0
    for c in reversed(coeffs):
        acc = acc * value + float(c)
    return acc


# ---------------------------------------------------------------------------
# identity suite

IDENTITIES = ("a", "b", "c", "T", "Ha", "Hb")


def identity_suite(jmax: int, S=None) -> dict:
    """Check every Chebyshev identity exactly; raise IdentityFailure at the first miss.

    (a) S_j^2 + S_{j-1}^2 - w S_j S_{j-1} = 1        for |j| <= jmax
    (b) S_j^2 - S_{j-1}^2 = S_{2j}                   for |j| <= jmax
    (c) S_{j-1}(w + (w^2-4) S_{j-1} S_j) + S_j = S_{3j}   for |j| <= jmax
    (T) T_j^2 + w^2 T_{j-1}^2 - z T_j T_{j-1} = w^{2j}    for 0 <= j <= jmax
    (Ha) (w^2-4) Delta_j = S_{2j} - (2j+1)                for 0 <= j <= jmax
    (Hb) (w^2-4)^2 H_j = (2j-2) w S_{2j} - (4j+2) S_{2j-1} + (4j+2) w

    ``S`` overrides the polynomial source (used for fault injection); it maps
    an index to a polynomial in ``w``.
    """
    if jmax < 1:
        raise ValidationError("jmax must be >= 1")
    var = "w"
    S = S or (lambda j: cheb_S(j, var))
    w = MultiPoly.var(var)
    one = MultiPoly.const(1, (var,))
    q = w * w - 4
    report = {}

    def check(name, j, lhs, rhs):
        if lhs != rhs:
            raise IdentityFailure(name, j, f"{lhs} != {rhs}")

    full = range(-jmax, jmax + 1)
    nonneg = range(0, jmax + 1)
    for j in full:
        check("a", j, S(j) ** 2 + S(j - 1) ** 2 - w * S(j) * S(j - 1), one)
    report["a"] = len(full)
    for j in full:
        check("b", j, S(j) ** 2 - S(j - 1) ** 2, S(2 * j))
    report["b"] = len(full)
    for j in full:
        check("c", j, S(j - 1) * (w + q * S(j - 1) * S(j)) + S(j), S(3 * j))
    report["c"] = len(full)

    z, ww = MultiPoly.var("z", ("z", "w")), MultiPoly.var("w", ("z", "w"))

    def T(j):
        s = S(j)
        d = max((e for (e,) in s.terms), default=-1)
        if j >= 0:
            d = j
        if d < 0:
            return MultiPoly.const(0, ("z", "w"))
        return MultiPoly(("z", "w"), {(e, d - e): c for (e,), c in s.in_vars((var,)).terms.items()})

    for j in nonneg:
        check("T", j, T(j) ** 2 + ww ** 2 * T(j - 1) ** 2 - z * T(j) * T(j - 1), ww ** (2 * j))
    report["T"] = len(nonneg)

    def derivs(j):
        s, sp = S(j), S(j - 1)
        d1 = s.partial(var) * sp - s * sp.partial(var)
        d2 = s.partial(var).partial(var) * sp - sp.partial(var).partial(var) * s
        return d1, d2

    for j in nonneg:
        check("Ha", j, q * derivs(j)[0], S(2 * j) - (2 * j + 1))
    report["Ha"] = len(nonneg)
    for j in nonneg:
        rhs = (2 * j - 2) * w * S(2 * j) - (4 * j + 2) * S(2 * j - 1) + (4 * j + 2) * w
        check("Hb", j, q * q * derivs(j)[1], rhs)
    report["Hb"] = len(nonneg)
    return {"jmax": jmax, "checked": report, "passed": True}

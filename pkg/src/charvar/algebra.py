"""Exact coefficient rings and sparse multivariate polynomials.

Integers are Python ints and rationals are ``fractions.Fraction``; both are
exact and unbounded.  ``MultiPoly`` is an immutable sparse term map
``{exponent tuple: coefficient}`` over an ordered tuple of variable names.
Binary operations on polynomials over different variable tuples first align
both operands to the union of their variables.

Evaluation goes through ring descriptors (``ZZ``, ``QQ``, ``CC``,
``PrimeField(p)``, ``QuotientRing(g)``) so the same polynomial can be
evaluated exactly, modulo a prime, inside ``Q[z]/(g)``, or in floating point.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Integral

from .errors import (
    DivisionByZeroPoly,
    MissingVariable,
    NotDivisible,
    OverlappingGroups,
    RingMismatch,
    UnknownVariable,
    ValidationError,
)

__all__ = [
    "MultiPoly",
    "polyvars",
    "poly_eval",
    "ZZ",
    "QQ",
    "CC",
    "PrimeField",
    "PrimeFieldElement",
    "QuotientRing",
    "QuotientElement",
    "univariate_coeffs",
    "from_univariate",
    "squarefree_part",
    "univariate_gcd",
]


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _coerce_coef(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, Integral):
        return int(c)
    if isinstance(c, Fraction):
        return _norm(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _exact_div(a, b):
    if type(a) is int and type(b) is int and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _grlex(e):
    return (sum(e), e)


def _fmt_coef(c):
    return str(c) if type(c) is int else f"{c.numerator}/{c.denominator}"


def _parse_coef(s):
    s = str(s)
    return int(s) if "/" not in s else _norm(Fraction(s))


class MultiPoly:
    """Sparse exact polynomial in an ordered tuple of named variables.

    >>> x, y, z = polyvars("x y z")
    >>> print(x * y - z)
    x*y - z
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars=(), terms=None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars}")
        n = len(vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for variables {vars}")
            c = _coerce_coef(c)
            if c:
                clean[exp] = c
        self.vars = vars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def const(cls, c, vars=()):
        vars = tuple(vars)
        c = _coerce_coef(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, name, vars=None):
        vars = (name,) if vars is None else tuple(vars)
        if name not in vars:
            raise UnknownVariable(name)
        return cls._raw(vars, {tuple(int(v == name) for v in vars): 1})

    @classmethod
    def monomial(cls, vars, exp, coef=1):
        return cls(vars, {tuple(exp): coef})

    # context handling

    def _embed(self, vars):
        if vars == self.vars:
            return self.terms
        idx = [vars.index(v) for v in self.vars]
        n = len(vars)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for i, e in zip(idx, exp):
                new[i] = e
            out[tuple(new)] = c
        return out

    def used_vars(self):
        used = [False] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def in_vars(self, vars):
        """Re-express over ``vars``; unused variables may be dropped."""
        vars = tuple(vars)
        missing = [v for v in self.used_vars() if v not in vars]
        if missing:
            raise UnknownVariable(f"{missing} not in {vars}")
        keep = [i for i, v in enumerate(self.vars) if v in vars]
        names = tuple(self.vars[i] for i in keep)
        projected = {tuple(exp[i] for i in keep): c for exp, c in self.terms.items()}
        return MultiPoly._raw(vars, MultiPoly._raw(names, projected)._embed(vars))

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (Integral, Fraction)) and not isinstance(other, bool):
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    @staticmethod
    def _align(a, b):
        if a.vars == b.vars:
            return a.vars, a.terms, b.terms
        union = a.vars + tuple(v for v in b.vars if v not in a.vars)
        return union, a._embed(union), b._embed(union)

    # arithmetic

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        vars, ta, tb = self._align(self, other)
        res = dict(ta)
        for e, c in tb.items():
            s = _norm(res.get(e, 0) + c)
            if s:
                res[e] = s
            else:
                del res[e]
        return MultiPoly._raw(vars, res)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        vars, ta, tb = self._align(self, other)
        return MultiPoly._raw(vars, _mul_terms(len(vars), ta, tb))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, Integral) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale_monomial(self, exp, coef=1):
        """Multiply by ``coef * vars**exp`` without a general product."""
        coef = _coerce_coef(coef)
        if not coef:
            return MultiPoly._raw(self.vars, {})
        exp = tuple(exp)
        return MultiPoly._raw(
            self.vars,
            {tuple(a + b for a, b in zip(e, exp)): _norm(c * coef) for e, c in self.terms.items()},
        )

    # comparison

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        _, ta, tb = self._align(self, other)
        return ta == tb

    def __hash__(self):
        if self._hash is None:
            used = tuple(sorted(self.used_vars()))
            self._hash = hash((used, frozenset(self.in_vars(used).terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def degree(self, var=None):
        """Total degree, or the degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def group_degrees(self, group):
        """Set of degrees that the terms have in the variables of ``group``."""
        idx = [self.vars.index(v) for v in group if v in self.vars]
        return {sum(e[i] for i in idx) for e in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def collect(self, group):
        """Split as ``sum c_e * group**e`` with coefficients in the other variables."""
        group = tuple(group)
        for v in group:
            if v not in self.vars:
                raise UnknownVariable(v)
        gi = [self.vars.index(v) for v in group]
        rest = tuple(v for v in self.vars if v not in group)
        ri = [self.vars.index(v) for v in rest]
        out = {}
        for exp, c in self.terms.items():
            ge = tuple(exp[i] for i in gi)
            out.setdefault(ge, {})[tuple(exp[i] for i in ri)] = c
        return {ge: MultiPoly._raw(rest, t) for ge, t in out.items()}

    # calculus and substitution

    def partial(self, var):
        if var not in self.vars:
            raise UnknownVariable(var)
        i = self.vars.index(var)
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return MultiPoly._raw(self.vars, out)

    def subs(self, var, q):
        """Replace ``var`` by the polynomial (or number) ``q`` everywhere."""
        if var not in self.vars:
            raise UnknownVariable(var)
        q = self._lift(q)
        if q is NotImplemented:
            raise TypeError("substitution value must be a polynomial or number")
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        by_power = {}
        for exp, c in self.terms.items():
            by_power.setdefault(exp[i], {})[exp[:i] + exp[i + 1:]] = c
        if not by_power:
            return MultiPoly._raw(rest, {})
        acc = MultiPoly._raw(rest, {})
        for d in range(max(by_power), -1, -1):
            acc = acc * q
            if d in by_power:
                acc = acc + MultiPoly._raw(rest, by_power[d])
        return acc

    def specialize(self, assignment):
        """Substitute numeric constants for some variables; returns the remaining polynomial."""
        for v in assignment:
            if v not in self.vars:
                raise UnknownVariable(v)
        fixed = [(i, _coerce_coef(assignment[v])) for i, v in enumerate(self.vars) if v in assignment]
        keep = [i for i, v in enumerate(self.vars) if v not in assignment]
        rest = tuple(self.vars[i] for i in keep)
        out = {}
        for exp, c in self.terms.items():
            for i, val in fixed:
                if exp[i]:
                    c = c * val ** exp[i]
                    if not c:
                        break
            if not c:
                continue
            k = tuple(exp[i] for i in keep)
            s = _norm(out.get(k, 0) + c)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MultiPoly._raw(rest, out)

    def divide_exact(self, q):
        """Return ``r`` with ``self == q * r``; raise ``NotDivisible`` otherwise."""
        q = self._lift(q)
        if q is NotImplemented:
            raise TypeError("divisor must be a polynomial or number")
        if not q.terms:
            raise DivisionByZeroPoly("division by the zero polynomial")
        vars, tp, tq = self._align(self, q)
        lq = max(tq, key=_grlex)
        cq = tq[lq]
        rem = dict(tp)
        heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
        heapq.heapify(heap)
        quot = {}
        while rem:
            while True:
                _, neg = heapq.heappop(heap)
                lp = tuple(-x for x in neg)
                if lp in rem:
                    break
            shift = tuple(a - b for a, b in zip(lp, lq))
            if any(s < 0 for s in shift):
                raise NotDivisible(f"leading monomial {lp} not divisible by {lq}")
            c = _exact_div(rem[lp], cq)
            quot[shift] = c
            for e, cc in tq.items():
                k = tuple(a + b for a, b in zip(e, shift))
                v = _norm(rem.get(k, 0) - c * cc)
                if v:
                    if k not in rem:
                        heapq.heappush(heap, (-sum(k), tuple(-x for x in k)))
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return MultiPoly._raw(vars, quot)

    def bihomogenize(self, groups):
        """Homogenize each variable group with its own fresh variable.

        ``groups`` is a sequence of ``(vars, homogenizing_var)``.  Each group
        is brought to the uniform degree of its highest-degree term.
        """
        groups = [(tuple(g), h) for g, h in groups]
        seen = set()
        hvars = []
        for g, h in groups:
            for v in g:
                if v in seen:
                    raise OverlappingGroups(f"variable {v} in more than one group")
                if v not in self.vars:
                    raise UnknownVariable(v)
                seen.add(v)
            if h in self.vars or h in hvars or h in seen:
                raise OverlappingGroups(f"homogenizing variable {h} is not fresh")
            hvars.append(h)
        stray = [v for v in self.used_vars() if v not in seen]
        if stray:
            raise ValidationError(f"variables {stray} are not covered by any group")
        idx = [[self.vars.index(v) for v in g] for g, _ in groups]
        tops = [max((sum(e[i] for i in ix) for e in self.terms), default=0) for ix in idx]
        out = {}
        for exp, c in self.terms.items():
            extra = tuple(top - sum(exp[i] for i in ix) for ix, top in zip(idx, tops))
            out[exp + extra] = c
        return MultiPoly._raw(self.vars + tuple(hvars), out)

    def dehomogenize(self, hvars):
        return self.specialize({h: 1 for h in hvars})

    # evaluation and serialization

    def eval(self, assignment, ring=None):
        return poly_eval(self, assignment, ZZ if ring is None else ring)

    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [{"coef": _fmt_coef(c), "exp": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, doc):
        vars = tuple(doc["vars"])
        return cls(vars, {tuple(t["exp"]): _parse_coef(t["coef"]) for t in doc["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exp) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt_coef(mag)}*{mono}"
            else:
                body = _fmt_coef(mag)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.vars}, {str(self)!r})"


def _mul_terms(n, ta, tb):
    if not ta or not tb:
        return {}
    if n == 0:
        c = _norm(ta[()] * tb[()])
        return {(): c} if c else {}
    if len(ta) < len(tb):
        ta, tb = tb, ta
    if len(tb) == 1:
        ((eb, cb),) = tb.items()
        return {tuple(a + b for a, b in zip(ea, eb)): _norm(ca * cb) for ea, ca in ta.items()}
    # Kronecker packing: each exponent gets a fixed-width bit field wide enough
    # for the largest possible sum, so packed addition never carries.
    maxa = [max(col) for col in zip(*ta)]
    maxb = [max(col) for col in zip(*tb)]
    width = max((x + y).bit_length() for x, y in zip(maxa, maxb)) + 1
    shifts = [width * i for i in range(n)]
    pa = [(sum(e << s for e, s in zip(exp, shifts)), c) for exp, c in ta.items()]
    pb = [(sum(e << s for e, s in zip(exp, shifts)), c) for exp, c in tb.items()]
    res = {}
    get = res.get
    for kb, cb in pb:
        for ka, ca in pa:
            k = ka + kb
            res[k] = get(k, 0) + ca * cb
    mask = (1 << width) - 1
    out = {}
    for k, c in res.items():
        if c:
            out[tuple((k >> s) & mask for s in shifts)] = _norm(c)
    return out


def polyvars(names, vars=None):
    """Variables sharing one context: ``x, y, z = polyvars("x y z")``."""
    names = tuple(names.split()) if isinstance(names, str) else tuple(names)
    ctx = names if vars is None else tuple(vars)
    return tuple(MultiPoly.var(n, ctx) for n in names)


# ---------------------------------------------------------------------------
# dense univariate helpers over Q (coefficient lists, lowest degree first)


def _utrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _uadd(a, b):
    n = max(len(a), len(b))
    return _utrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _usub(a, b):
    return _uadd(a, [-c for c in b])


def _umul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _utrim(out)


def _udivmod(a, b):
    b = _utrim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = [Fraction(c) for c in _utrim(a)]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lb
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = _utrim(a)
    return _utrim(q), a


def _umonic(a):
    a = _utrim(a)
    if not a:
        return a
    lc = Fraction(a[-1])
    return [Fraction(c) / lc for c in a]


def _ugcd(a, b):
    a, b = _utrim(a), _utrim(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    return _umonic(a)


def _uxgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = _utrim(a), _utrim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _udivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _usub(s0, _umul(q, s1))
        t0, t1 = t1, _usub(t0, _umul(q, t1))
    if not r0:
        return [], [], []
    lc = Fraction(r0[-1])
    return [c / lc for c in r0], [c / lc for c in s0], [c / lc for c in t0]


def _uderiv(a):
    return _utrim([i * c for i, c in enumerate(a)][1:])


def univariate_coeffs(p, var=None):
    """Dense coefficient list (lowest degree first) of a univariate polynomial."""
    used = p.used_vars()
    if len(used) > 1 or (var is not None and used and used[0] != var):
        raise ValidationError(f"polynomial in {used} is not univariate in {var}")
    if var is None:
        var = used[0] if used else (p.vars[0] if p.vars else "z")
    q = p.in_vars((var,))
    out = [0] * (q.degree() + 1)
    for (e,), c in q.terms.items():
        out[e] = c
    return out


def from_univariate(coeffs, var="z"):
    return MultiPoly((var,), {(i,): c for i, c in enumerate(coeffs) if c})


def univariate_gcd(p, q, var=None):
    if var is None:
        used = p.used_vars() or q.used_vars()
        var = used[0] if used else "z"
    return from_univariate(_ugcd(univariate_coeffs(p, var), univariate_coeffs(q, var)), var)


def squarefree_part(p, var=None):
    """Monic squarefree part over Q: p / gcd(p, p')."""
    if var is None:
        used = p.used_vars()
        var = used[0] if used else "z"
    a = univariate_coeffs(p, var)
    g = _ugcd(a, _uderiv(a))
    return from_univariate(_umonic(_udivmod(a, g)[0]), var)


# ---------------------------------------------------------------------------
# rings


class IntegerRing:
    name = "ZZ"
    zero, one = 0, 1

    def convert(self, v):
        if isinstance(v, Integral) and not isinstance(v, bool):
            return int(v)
        if isinstance(v, Fraction) and v.denominator == 1:
            return v.numerator
        raise RingMismatch(f"{v!r} is not an integer")

    def __repr__(self):
        return "ZZ"


class RationalField:
    name = "QQ"
    zero, one = Fraction(0), Fraction(1)

    def convert(self, v):
        if isinstance(v, (Integral, Fraction)) and not isinstance(v, bool):
            return Fraction(v)
        raise RingMismatch(f"{v!r} is not rational")

    def __repr__(self):
        return "QQ"


class ComplexField:
    """IEEE double-precision complex numbers."""

    name = "CC"
    zero, one = 0j, 1 + 0j

    def convert(self, v):
        if isinstance(v, (PrimeFieldElement, QuotientElement)):
            raise RingMismatch(f"cannot embed {v!r} in CC")
        return complex(v)

    def __repr__(self):
        return "CC"


ZZ = IntegerRing()
QQ = RationalField()
CC = ComplexField()


@lru_cache(maxsize=64)
def _is_prime(p):
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    residue: int
    modulus: int

    def __post_init__(self):
        p = self.modulus
        if p <= 2 or not _is_prime(p):
            raise ValidationError(f"modulus {p} must be an odd prime")
        if not 0 <= self.residue < p:
            object.__setattr__(self, "residue", self.residue % p)

    def _other(self, o):
        if isinstance(o, PrimeFieldElement):
            if o.modulus != self.modulus:
                raise RingMismatch(f"moduli {self.modulus} and {o.modulus} differ")
            return o.residue
        if isinstance(o, Integral) and not isinstance(o, bool):
            return int(o) % self.modulus
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.modulus) % self.modulus
        return None

    def _new(self, r):
        return PrimeFieldElement(r % self.modulus, self.modulus)

    def __add__(self, o):
        r = self._other(o)
        return NotImplemented if r is None else self._new(self.residue + r)

    __radd__ = __add__

    def __sub__(self, o):
        r = self._other(o)
        return NotImplemented if r is None else self._new(self.residue - r)

    def __rsub__(self, o):
        r = self._other(o)
        return NotImplemented if r is None else self._new(r - self.residue)

    def __mul__(self, o):
        r = self._other(o)
        return NotImplemented if r is None else self._new(self.residue * r)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.residue)

    def inverse(self):
        if not self.residue:
            raise ZeroDivisionError("zero has no inverse")
        return self._new(pow(self.residue, -1, self.modulus))

    def __truediv__(self, o):
        r = self._other(o)
        if r is None:
            return NotImplemented
        return self * self._new(r).inverse()

    def __rtruediv__(self, o):
        r = self._other(o)
        return NotImplemented if r is None else self._new(r) * self.inverse()

    def __pow__(self, k):
        return self._new(pow(self.residue, k, self.modulus))

    def __eq__(self, o):
        r = self._other(o)
        return NotImplemented if r is None else self.residue == r

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return bool(self.residue)

    def __int__(self):
        return self.residue


class PrimeField:
    def __init__(self, p):
        p = int(p)
        if p <= 2 or not _is_prime(p):
            raise ValidationError(f"modulus {p} must be an odd prime")
        self.p = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def residue(self, v):
        if isinstance(v, PrimeFieldElement):
            if v.modulus != self.p:
                raise RingMismatch(f"value mod {v.modulus} used in GF({self.p})")
            return v.residue
        if isinstance(v, Integral) and not isinstance(v, bool):
            return int(v) % self.p
        if isinstance(v, Fraction):
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        raise RingMismatch(f"{v!r} cannot be mapped to GF({self.p})")

    def convert(self, v):
        return PrimeFieldElement(self.residue(v), self.p)

    def __call__(self, v):
        return self.convert(v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class QuotientRing:
    """``Q[var]/(g)`` with ``g`` made monic over Q."""

    def __init__(self, modulus, var=None):
        if isinstance(modulus, MultiPoly):
            coeffs = univariate_coeffs(modulus, var)
            if var is None:
                used = modulus.used_vars()
                var = used[0] if used else "z"
        else:
            coeffs = list(modulus)
        coeffs = _umonic([Fraction(c) for c in coeffs])
        if len(coeffs) < 2:
            raise ValidationError("quotient modulus must have positive degree")
        self.var = var or "z"
        self.modulus = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.zero = QuotientElement(self, ())
        self.one = QuotientElement(self, (Fraction(1),))

    def reduce(self, coeffs):
        return QuotientElement(self, tuple(_udivmod(coeffs, self.modulus)[1]))

    def gen(self):
        return self.reduce([0, 1])

    def from_poly(self, p):
        return self.reduce(univariate_coeffs(p, self.var))

    def convert(self, v):
        if isinstance(v, QuotientElement):
            if v.ring != self:
                raise RingMismatch("quotient elements over different moduli")
            return v
        if isinstance(v, MultiPoly):
            return self.from_poly(v)
        if isinstance(v, (Integral, Fraction)) and not isinstance(v, bool):
            return QuotientElement(self, (Fraction(v),) if v else ())
        raise RingMismatch(f"{v!r} cannot be mapped to {self}")

    def modulus_poly(self):
        return from_univariate(self.modulus, self.var)

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Q/", self.modulus))

    def __repr__(self):
        return f"QQ[{self.var}]/({self.modulus_poly()})"


class QuotientElement:
    """Residue class in ``Q[z]/(g)``, stored as reduced dense coefficients."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(Fraction(c) for c in _utrim(coeffs))

    def _other(self, o):
        try:
            return self.ring.convert(o).coeffs
        except RingMismatch:
            if isinstance(o, QuotientElement):
                raise
            return None

    def __add__(self, o):
        c = self._other(o)
        return NotImplemented if c is None else QuotientElement(self.ring, _uadd(self.coeffs, c))

    __radd__ = __add__

    def __sub__(self, o):
        c = self._other(o)
        return NotImplemented if c is None else QuotientElement(self.ring, _usub(self.coeffs, c))

    def __rsub__(self, o):
        c = self._other(o)
        return NotImplemented if c is None else QuotientElement(self.ring, _usub(c, self.coeffs))

    def __neg__(self):
        return QuotientElement(self.ring, [-c for c in self.coeffs])

    def __mul__(self, o):
        c = self._other(o)
        return NotImplemented if c is None else self.ring.reduce(_umul(list(self.coeffs), list(c)))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_unit(self):
        return bool(self.coeffs) and len(_ugcd(list(self.coeffs), list(self.ring.modulus))) == 1

    def inverse(self):
        g, s, _ = _uxgcd(list(self.coeffs), list(self.ring.modulus))
        if len(g) != 1:
            raise ZeroDivisionError("element is a zero divisor in the quotient ring")
        return self.ring.reduce(s)

    def __truediv__(self, o):
        c = self._other(o)
        if c is None:
            return NotImplemented
        return self * QuotientElement(self.ring, c).inverse()

    def __rtruediv__(self, o):
        c = self._other(o)
        if c is None:
            return NotImplemented
        return QuotientElement(self.ring, c) * self.inverse()

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, o):
        c = self._other(o)
        return NotImplemented if c is None else tuple(c) == self.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    @property
    def residue(self):
        return from_univariate(self.coeffs, self.ring.var)

    def __repr__(self):
        return f"[{self.residue}]"


# ---------------------------------------------------------------------------
# evaluation


def poly_eval(p, assignment, ring=ZZ):
    """Evaluate ``p`` at ``assignment`` (variable name -> value) inside ``ring``."""
    missing = [v for v in p.used_vars() if v not in assignment]
    if missing:
        raise MissingVariable(f"no value for {missing}")
    if any(v not in assignment for v in p.vars):
        p = p.in_vars(p.used_vars())
    if isinstance(ring, PrimeField):
        vals = [ring.residue(assignment[v]) for v in p.vars]
        return PrimeFieldElement(_eval_mod(p, vals, ring.p), ring.p)
    vals = [ring.convert(assignment[v]) for v in p.vars]
    if not p.terms:
        return ring.zero
    maxe = [max(col) for col in zip(*p.terms)] if p.vars else []
    powers = []
    for v, top in zip(vals, maxe):
        row = [ring.one]
        for _ in range(top):
            row.append(row[-1] * v)
        powers.append(row)
    total = ring.zero
    for exp, c in p.terms.items():
        term = ring.convert(c)
        for row, e in zip(powers, exp):
            if e:
                term = term * row[e]
        total = total + term
    return total


def _eval_mod(p, vals, mod):
    if not p.terms:
        return 0
    maxe = [max(col) for col in zip(*p.terms)] if p.vars else []
    powers = []
    for v, top in zip(vals, maxe):
        row = [1]
        for _ in range(top):
            row.append(row[-1] * v % mod)
        powers.append(row)
    total = 0
    for exp, c in p.terms.items():
        if type(c) is not int:
            c = c.numerator * pow(c.denominator, -1, mod)
        for row, e in zip(powers, exp):
            if e:
                c = c * row[e] % mod
        total += c
    return total % mod

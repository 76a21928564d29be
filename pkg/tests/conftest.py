import sympy as sp
from fractions import Fraction

from hypothesis import settings, strategies as st

from charvar.algebra import MultiPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

XYZ = ("x", "y", "z")


def to_sympy(p: MultiPoly):
    syms = [sp.Symbol(v) for v in p.vars]
    out = sp.Integer(0)
    for exp, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sp.Integer(c)
        for s, e in zip(syms, exp):
            term *= s**e
        out += term
    return sp.expand(out)


def from_sympy(expr, vars):
    poly = sp.Poly(sp.expand(expr), *[sp.Symbol(v) for v in vars])
    terms = {}
    for exp, c in poly.terms():
        c = sp.Rational(c)
        terms[exp] = Fraction(int(c.p), int(c.q))
    return MultiPoly(vars, terms)


coefs = st.integers(-20, 20)
rational_coefs = st.fractions(min_value=-10, max_value=10, max_denominator=6)


def polys(vars=XYZ, max_deg=3, max_terms=6, coef=coefs):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in vars])
    return st.dictionaries(exps, coef, max_size=max_terms).map(lambda t: MultiPoly(vars, t))


odd_hyperbolic = st.sampled_from([3, 5, 7, 9, -3, -5, -7, -9])


# acceptance criteria report: one line per criterion, printed after the run
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[num]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))

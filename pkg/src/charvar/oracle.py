"""Randomized cross-checks over SL2(F_p).

Every symbolic claim here is a polynomial identity in (x, y, z).  We sample
a random pair of SL2 matrices over a large prime field, multiply the words
out literally, and compare with the symbolic side evaluated at the sample's
character.  By Schwartz-Zippel a false identity of degree d survives one
trial with probability at most d/p.

Trial ``i`` draws from ``numpy.random.default_rng([seed, i])``, so a report
depends only on (claim, params, seed, trials, p), never on trial order.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import MultiPoly, PrimeField, PrimeFieldElement, poly_eval
from .errors import IdentityRefuted, InvalidParams, ValidationError
from .variety import LinkParams, natural_model, reducible_poly, t_poly
from .words import Word, link_words, phi_via_traces, trace_poly

__all__ = [
    "DEFAULT_PRIME",
    "default_prime",
    "Mat2",
    "RepSample",
    "sample_rep",
    "word_trace_matrix",
    "trace_corpus",
    "pit_check",
    "CLAIMS",
]

DEFAULT_PRIME = 2**61 - 1
MAX_ATTEMPTS = 100
CLAIMS = ("trace_poly_of", "phi", "t_is_Pwk", "model_product")
FAULTS = (None, "kappa_sign")


def default_prime() -> int:
    env = os.environ.get("CHARVAR_PRIME")
    return int(env) if env else DEFAULT_PRIME


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix of determinant 1 over a prime field."""

    a11: PrimeFieldElement
    a12: PrimeFieldElement
    a21: PrimeFieldElement
    a22: PrimeFieldElement

    def __post_init__(self):
        mods = {e.modulus for e in self.entries()}
        if len(mods) != 1:
            raise ValidationError("matrix entries over different moduli")
        if self.det() != 1:
            raise ValidationError("matrix is not in SL2")

    @classmethod
    def from_ints(cls, p, a11, a12, a21, a22):
        F = PrimeField(p)
        return cls(F(a11), F(a12), F(a21), F(a22))

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    @property
    def modulus(self):
        return self.a11.modulus

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self):
        return self.a11 + self.a22

    def __matmul__(self, o):
        return Mat2(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )

    def inverse(self):
        # adjugate, since det = 1
        return Mat2(self.a22, -self.a12, -self.a21, self.a11)

    def residues(self):
        return tuple(e.residue for e in self.entries())


@dataclass(frozen=True)
class RepSample:
    A: Mat2
    B: Mat2

    @property
    def p(self):
        return self.A.modulus

    @property
    def character(self):
        """(tr A, tr B, tr AB^-1) as residues."""
        z = (self.A @ self.B.inverse()).trace()
        return (self.A.trace().residue, self.B.trace().residue, z.residue)

    def assignment(self):
        return dict(zip(("x", "y", "z"), self.character))


def _uniform(rng, p):
    nbytes = (p.bit_length() + 7) // 8 + 8  # extra bytes keep the modulo bias below 2^-64
    return int.from_bytes(rng.bytes(nbytes), "little") % p


def _random_sl2(rng, p):
    for _ in range(MAX_ATTEMPTS):
        a11, a12, a21 = (_uniform(rng, p) for _ in range(3))
        if a11 == 0:
            continue
        a22 = (1 + a12 * a21) * pow(a11, -1, p) % p
        return Mat2.from_ints(p, a11, a12, a21, a22)
    raise RuntimeError("could not sample an SL2 matrix")


def _random_upper(rng, p):
    for _ in range(MAX_ATTEMPTS):
        a = _uniform(rng, p)
        if a:
            return Mat2.from_ints(p, a, _uniform(rng, p), 0, pow(a, -1, p))
    raise RuntimeError("could not sample a triangular matrix")


def sample_rep(p: int, seed: int, mode: str = "generic", trial: int = 0) -> RepSample:
    """Random pair (A, B) in SL2(F_p); ``reducible`` makes both upper triangular."""
    if p <= 5:
        raise InvalidParams(f"prime {p} too small; need p > 5")
    PrimeField(p)  # primality check
    rng = np.random.default_rng([seed, trial])
    if mode == "generic":
        return RepSample(_random_sl2(rng, p), _random_sl2(rng, p))
    if mode == "reducible":
        return RepSample(_random_upper(rng, p), _random_upper(rng, p))
    raise ValidationError(f"unknown sampling mode {mode!r}")


def _mul(m, n, p):
    a, b, c, d = m
    e, f, g, h = n
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def _letters(rep):
    A, B = rep.A.residues(), rep.B.residues()
    return {
        "a": A,
        "b": B,
        "A": rep.A.inverse().residues(),
        "B": rep.B.inverse().residues(),
    }


def _word_matrix(w, letters, p):
    out = (1, 0, 0, 1)
    for ch in Word(w).letters:
        out = _mul(out, letters[ch], p)
    return out


def word_trace_matrix(w, rep: RepSample) -> PrimeFieldElement:
    """Trace of the literal product of the word's letter matrices."""
    p = rep.p
    m = _word_matrix(w, _letters(rep), p)
    return PrimeFieldElement((m[0] + m[3]) % p, p)


@lru_cache(maxsize=4)
def trace_corpus(max_len: int = 6, max_mn: int = 3) -> tuple:
    """All reduced words of length <= max_len, plus w_k, r, rab, bar for |m|,|n| <= max_mn."""
    words = {Word("")}
    for n in range(1, max_len + 1):
        for letters in itertools.product("aAbB", repeat=n):
            w = Word("".join(letters))
            if len(w) == n:
                words.add(w)
    for m in range(-max_mn, max_mn + 1):
        for n in range(-max_mn, max_mn + 1):
            lw = link_words(m, n)
            words.update({lw.wk, lw.r, lw.r * "ab", Word("ba") * lw.r})
    return tuple(sorted(words, key=lambda w: (len(w), w.letters)))


def _faulty_kappa():
    x, y, z = (MultiPoly.var(v, ("x", "y", "z")) for v in "xyz")
    return x * y * z + 4 - x * x - y * y + z * z


def _claim_pairs(claim, params, fault):
    """List of (label, symbolic poly, brute-force function rep -> residue)."""

    def tr(w):
        return lambda rep, letters: _tr(w, letters, rep.p)

    def diff(w1, w2):
        return lambda rep, letters: (_tr(w1, letters, rep.p) - _tr(w2, letters, rep.p)) % rep.p

    if claim == "trace_poly_of":
        word = params.get("word")
        corpus = (Word(word),) if word is not None else trace_corpus()
        return [(str(w), trace_poly(w), tr(w)) for w in corpus]
    if claim == "t_is_Pwk":
        m = _need(params, "m")
        return [(f"m={m}", t_poly(m), tr(link_words(m, 0).wk))]
    k, l = _need(params, "k"), _need(params, "l")
    p = LinkParams(k, l)
    r = link_words(p.m, p.n).r
    brute = diff(r * "ab", Word("ba") * r)
    if claim == "phi":
        return [(f"k={k},l={l}", phi_via_traces(k, l), brute)]
    if claim == "model_product":
        kappa = _faulty_kappa() if fault == "kappa_sign" else reducible_poly()
        return [(f"k={k},l={l}", kappa * natural_model(k, l), brute)]
    raise ValidationError(f"unknown claim {claim!r}; choose from {CLAIMS}")


def _tr(w, letters, p):
    m = _word_matrix(w, letters, p)
    return (m[0] + m[3]) % p


def _need(params, key):
    v = params.get(key)
    if v is None:
        raise ValidationError(f"claim needs parameter {key!r}")
    return v


def pit_check(
    claim: str,
    trials: int = 50,
    p: int | None = None,
    seed: int = 0,
    fault: str | None = None,
    raise_on_fail: bool = True,
    **params,
) -> dict:
    """Schwartz-Zippel test of ``claim`` over ``trials`` random SL2(F_p) samples.

    Params: ``word`` for trace_poly_of (default: the whole corpus), ``m`` for
    t_is_Pwk, ``k`` and ``l`` otherwise.  ``fault="kappa_sign"`` flips the
    sign of z^2 in the reducible factor, for testing that refutation works.
    """
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    if fault not in FAULTS:
        raise ValidationError(f"unknown fault {fault!r}")
    p = default_prime() if p is None else int(p)
    field = PrimeField(p)
    pairs = _claim_pairs(claim, params, fault)
    max_deg = max((poly.degree() for _, poly, _ in pairs), default=0)
    report = {
        "claim": claim,
        "params": {k: v for k, v in params.items() if v is not None},
        "prime": p,
        "seed": seed,
        "trials": trials,
        "identities": len(pairs),
        "max_degree": max_deg,
        "false_accept_bound_per_trial": max_deg / p,
        "passed": True,
        "witness": None,
    }
    if fault:
        report["fault"] = fault
    for i in range(trials):
        rep = sample_rep(p, seed, "generic", trial=i)
        at = rep.assignment()
        letters = _letters(rep)
        for label, poly, brute in pairs:
            sym = poly_eval(poly, at, field).residue
            direct = brute(rep, letters)
            if sym != direct:
                witness = {"trial": i, "identity": label, "character": list(rep.character),
                           "symbolic": sym, "matrix": direct}
                report["passed"] = False
                report["witness"] = witness
                if raise_on_fail:
                    err = IdentityRefuted(claim, witness)
                    err.report = report
                    raise err
                return report
    return report

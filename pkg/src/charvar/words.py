"""Words in the free group <a, b> and their trace polynomials.

Words are strings over ``a, A, b, B`` (capitals are inverses), always freely
reduced.  The trace polynomial of a word is written in the coordinates

    x = tr(a),  y = tr(b),  z = tr(a b^-1),

so ``tr(ab) = xy - z``.

Two independent routes compute it.  ``trace_poly`` multiplies letters inside
the rank-4 algebra spanned by ``1, A, B, AB`` (every product of two SL2
matrices reduces there by Cayley-Hamilton), which is linear in the word
length.  ``trace_poly_reduce`` applies the classical trace identities
recursively and is kept as a cross-check for short words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MultiPoly
from .errors import ComplexityLimit, ValidationError

__all__ = [
    "Word",
    "word_build",
    "word_reverse",
    "LinkWords",
    "link_words",
    "trace_poly",
    "trace_poly_reduce",
    "phi_via_traces",
]

_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}
XYZ = ("x", "y", "z")
MAX_WORD_LENGTH = 10_000


def _reduce(s):
    out = []
    for ch in s:
        if ch not in _INV:
            raise ValidationError(f"bad letter {ch!r}; use a, A, b, B")
        if out and out[-1] == _INV[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


class Word:
    """Freely reduced word; immutable and hashable."""

    __slots__ = ("letters",)

    def __init__(self, letters=""):
        if isinstance(letters, Word):
            letters = letters.letters
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, *_):
        raise AttributeError("Word is immutable")

    def __mul__(self, other):
        return Word(self.letters + Word(other).letters)

    def __rmul__(self, other):
        return Word(Word(other).letters + self.letters)

    def inverse(self):
        return Word("".join(_INV[c] for c in reversed(self.letters)))

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def reverse(self):
        return Word(self.letters[::-1])

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if isinstance(other, str):
            other = Word(other)
        return isinstance(other, Word) and other.letters == self.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return self.letters

    def __repr__(self):
        return f"Word({self.letters!r})"


def word_build(*factors) -> Word:
    """Formal product; each factor is a word/string or a ``(word, exponent)`` pair."""
    out = Word()
    for f in factors:
        if isinstance(f, tuple):
            base, k = f
            out = out * (Word(base) ** k)
        else:
            out = out * Word(f)
    return out


def word_reverse(w) -> Word:
    return Word(w).reverse()


@dataclass(frozen=True)
class LinkWords:
    m: int
    n: int
    wk: Word
    r: Word
    r_rev: Word


def link_words(m: int, n: int) -> LinkWords:
    """w_k = (ab^-1)^m ab (a^-1 b)^m and the relator word r = w_k^n (ab^-1)^m."""
    wk = word_build(("aB", m), "ab", ("Ab", m))
    r = word_build((wk, n), ("aB", m))
    return LinkWords(m, n, wk, r, r.reverse())


# ---------------------------------------------------------------------------
# trace via the algebra with basis 1, A, B, AB
#
# Right multiplication rules, from A^2 = xA - 1, B^2 = yB - 1 and
# BA = -AB + yA + xB - z:
#   (c0 + c1 A + c2 B + c3 AB) * A
#       = (-c1 - z c2 - y c3) + (c0 + x c1 + y c2 + (xy - z) c3) A + (x c2 + c3) B - c2 AB
#   (c0 + c1 A + c2 B + c3 AB) * B
#       = -c2 - c3 A + (c0 + y c2) B + (c1 + y c3) AB


def _gens():
    return tuple(MultiPoly.var(v, XYZ) for v in XYZ)


def _times_a(v, x, y, z, xy_z):
    c0, c1, c2, c3 = v
    return (
        -c1 - z * c2 - y * c3,
        c0 + x * c1 + y * c2 + xy_z * c3,
        x * c2 + c3,
        -c2,
    )


def _times_b(v, y):
    c0, c1, c2, c3 = v
    return (-c2, -c3, c0 + y * c2, c1 + y * c3)


def algebra_element(w, start=None):
    """Coefficients of ``start * w`` in the basis (1, A, B, AB)."""
    x, y, z = _gens()
    xy_z = x * y - z
    zero = MultiPoly.const(0, XYZ)
    v = start or (MultiPoly.const(1, XYZ), zero, zero, zero)
    for ch in Word(w).letters:
        if ch == "a":
            v = _times_a(v, x, y, z, xy_z)
        elif ch == "b":
            v = _times_b(v, y)
        elif ch == "A":  # a^-1 = x - a
            va = _times_a(v, x, y, z, xy_z)
            v = tuple(x * c - d for c, d in zip(v, va))
        else:  # b^-1 = y - b
            vb = _times_b(v, y)
            v = tuple(y * c - d for c, d in zip(v, vb))
    return v


def element_trace(v):
    x, y, z = _gens()
    c0, c1, c2, c3 = v
    return 2 * c0 + x * c1 + y * c2 + (x * y - z) * c3


def trace_poly(w, max_length: int = MAX_WORD_LENGTH) -> MultiPoly:
    """P_w(x, y, z) with tr(rho(w)) = P_w(tr a, tr b, tr ab^-1) for every SL2 rep."""
    w = Word(w)
    if len(w) > max_length:
        raise ComplexityLimit(f"word of length {len(w)} exceeds {max_length}")
    return element_trace(algebra_element(w))


# ---------------------------------------------------------------------------
# trace via recursive trace identities


def _cyclic_reduce(s):
    s = _reduce(s)
    while len(s) >= 2 and s[0] == _INV[s[-1]]:
        s = s[1:-1]
    return s


def _canonical(s):
    s = _cyclic_reduce(s)
    if not s:
        return s
    return min(s[i:] + s[:i] for i in range(len(s)))


_TRACE_MEMO: dict[str, MultiPoly] = {}


def trace_poly_reduce(w, max_length: int = 64) -> MultiPoly:
    """Trace polynomial by recursive reduction (memoized on cyclic rotations).

    Order of rewrites: eliminate inverse letters with tr(U g^-1) = x_g tr(U) - tr(Ug);
    collapse squares with tr(g g V) = x_g tr(g V) - tr(V); split alternating
    words with tr(uv) = tr(u) tr(v) - tr(u v^-1).
    """
    w = Word(w)
    if len(w) > max_length:
        raise ComplexityLimit(f"word of length {len(w)} exceeds {max_length}")
    return _tr(_canonical(w.letters))


def _tr(s):
    s = _canonical(s)
    hit = _TRACE_MEMO.get(s)
    if hit is not None:
        return hit
    x, y, z = _gens()
    gen = {"a": x, "b": y, "A": x, "B": y}
    if s == "":
        res = MultiPoly.const(2, XYZ)
    elif len(s) == 1:
        res = gen[s]
    elif s == "ab":
        res = x * y - z
    elif s in ("Ba", "aB"):
        res = z
    elif any(c in "AB" for c in s):
        i = next(i for i, c in enumerate(s) if c in "AB")
        rot = s[i + 1:] + s[: i + 1]  # ends with the inverse letter
        u, g = rot[:-1], _INV[rot[-1]]
        res = gen[g] * _tr(u) - _tr(u + g)
    else:
        n = len(s)
        i = next((i for i in range(n) if s[i] == s[(i + 1) % n]), None)
        if i is not None:
            rot = s[i:] + s[:i]  # starts with g g
            g, v = rot[0], rot[2:]
            res = gen[g] * _tr(g + v) - _tr(v)
        else:
            # s = (ab)^k; split on a block boundary so u v^-1 collapses to (ab)^{<=1}
            half = 2 * (n // 4)
            u, v = s[:half], s[half:]
            res = _tr(u) * _tr(v) - _tr(u + Word(v).inverse().letters)
    _TRACE_MEMO[s] = res
    return res


def phi_via_traces(k: int, l: int) -> MultiPoly:
    """P_{rab} - P_{bar}, computed from the relator word."""
    from .variety import LinkParams

    p = LinkParams(k, l)
    words = link_words(p.m, p.n)
    if len(words.r) + 2 > MAX_WORD_LENGTH:
        raise ComplexityLimit(f"relator of length {len(words.r)} exceeds {MAX_WORD_LENGTH}")
    vr = algebra_element(words.r)
    # tr(b a r) = tr(r b a)
    return element_trace(algebra_element("ab", vr)) - element_trace(algebra_element("ba", vr))

import pytest
from hypothesis import given, settings, strategies as st

from charvar.algebra import PrimeField, poly_eval
from charvar.errors import IdentityRefuted, InvalidParams, ValidationError
from charvar.oracle import (
    DEFAULT_PRIME,
    Mat2,
    default_prime,
    pit_check,
    sample_rep,
    trace_corpus,
    word_trace_matrix,
)
from charvar.variety import reducible_poly
from charvar.words import Word, link_words, trace_poly

P = DEFAULT_PRIME
F = PrimeField(P)


def test_sample_generic_is_sl2():
    rep = sample_rep(P, 3)
    assert rep.A.det() == 1 and rep.B.det() == 1
    assert sample_rep(P, 3) == rep
    assert sample_rep(P, 4) != rep


def test_sample_reducible():
    for seed in range(20):
        rep = sample_rep(P, seed, "reducible")
        assert poly_eval(reducible_poly(), rep.assignment(), F) == 0
        comm = Word("abAB")
        assert word_trace_matrix(comm, rep) == 2


def test_sample_rejects_small_prime():
    with pytest.raises(InvalidParams):
        sample_rep(5, 0)
    with pytest.raises(ValidationError):
        sample_rep(P, 0, "bogus")


def test_mat2_checks():
    with pytest.raises(ValidationError):
        Mat2.from_ints(P, 1, 1, 1, 1)
    m = Mat2.from_ints(P, 2, 3, 1, 2)
    assert (m @ m.inverse()).residues() == (1, 0, 0, 1)


def test_word_trace_examples():
    rep = sample_rep(P, 9)
    x, y, z = rep.character
    assert word_trace_matrix("", rep) == 2
    assert word_trace_matrix("a", rep) == x
    assert word_trace_matrix("aB", rep) == z
    assert word_trace_matrix("ab", rep) == (x * y - z) % P


@settings(max_examples=40)
@given(st.integers(0, 2**32), st.text(alphabet="aAbB", max_size=14))
def test_trace_poly_matches_matrices(seed, w):
    rep = sample_rep(P, seed)
    assert poly_eval(trace_poly(w), rep.assignment(), F) == word_trace_matrix(w, rep)


def test_link_words_match_matrices_200_samples():
    ws = []
    for m in range(-3, 4):
        for n in range(-3, 4):
            lw = link_words(m, n)
            ws += [lw.wk, lw.r, lw.r * "ab", Word("ba") * lw.r]
    polys = [(w, trace_poly(w)) for w in set(ws)]
    for seed in range(200):
        rep = sample_rep(P, 1000, trial=seed)
        at = rep.assignment()
        for w, p in polys:
            assert poly_eval(p, at, F) == word_trace_matrix(w, rep)


def test_corpus_contents():
    corpus = trace_corpus()
    assert Word("") in corpus and Word("abAB") in corpus
    assert sum(1 for w in corpus if len(w) == 2) == 12
    assert link_words(3, -3).r in corpus


def test_pit_examples():
    assert pit_check("trace_poly_of", 50, seed=1, word="ab")["passed"]
    assert pit_check("phi", 50, seed=1, k=3, l=5)["passed"]
    assert pit_check("t_is_Pwk", 50, seed=1, m=2)["passed"]
    assert pit_check("model_product", 50, seed=1, k=-5, l=7)["passed"]


def test_fault_injection_refuted():
    with pytest.raises(IdentityRefuted) as err:
        pit_check("model_product", 50, seed=2, fault="kappa_sign", k=3, l=5)
    wit = err.value.witness
    assert wit["symbolic"] != wit["matrix"]
    rep = pit_check("model_product", 50, seed=2, fault="kappa_sign", raise_on_fail=False, k=3, l=5)
    assert not rep["passed"] and rep["witness"] is not None


def test_determinism_and_prime_override(monkeypatch):
    a = pit_check("phi", 10, seed=5, k=3, l=-5)
    b = pit_check("phi", 10, seed=5, k=3, l=-5)
    assert a == b
    monkeypatch.setenv("CHARVAR_PRIME", "1000003")
    assert default_prime() == 1000003
    c = pit_check("phi", 10, seed=5, k=3, l=-5)
    assert c["prime"] == 1000003 and c["passed"]


def test_pit_bad_inputs():
    with pytest.raises(ValidationError):
        pit_check("phi", 0, k=3, l=5)
    with pytest.raises(ValidationError):
        pit_check("phi", 5)
    with pytest.raises(ValidationError):
        pit_check("nonsense", 5)

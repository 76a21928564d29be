"""Exact and randomized computations on SL2 character varieties of double twist links J(k, l)."""

from .algebra import CC, QQ, ZZ, MultiPoly, PrimeField, QuotientRing, poly_eval
from .chebyshev import cheb_roots, cheb_S, cheb_T, identity_suite
from .geometry import (
    F_homogeneous,
    F_partials,
    degenerate_fibers,
    euler_blowup,
    invariants,
    singular_points,
    singular_search_crosscheck,
    smoothness_check,
)
from .oracle import pit_check, sample_rep, word_trace_matrix
from .variety import LinkParams, build_model, curve_poly, diagonal_split, natural_model, reducible_poly, t_poly
from .words import Word, link_words, phi_via_traces, trace_poly

__version__ = "0.1.0"

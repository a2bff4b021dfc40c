from __future__ import annotations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from supertrees.enumeration import canonical_code, canonical_form
from supertrees.hypergraph import Hypergraph, degree_profile, is_supertree, read_hgt, write_hgt
from supertrees.spectral import collatz_wielandt, spectral_radius


@st.composite
def supertrees(draw, max_edges: int = 7, uniform: bool | None = None):
    """Grow a supertree by hanging each new edge from one existing vertex."""
    k = draw(st.integers(2 if uniform is False else 3, 5))
    m = draw(st.integers(1, max_edges))
    same = draw(st.booleans()) if uniform is None else uniform
    edges = [tuple(range(k))]
    n = k
    for _ in range(m - 1):
        size = k if same else draw(st.integers(2, 5))
        anchor = draw(st.integers(0, n - 1))
        edges.append((anchor, *range(n, n + size - 1)))
        n += size - 1
    return Hypergraph(n, tuple(edges))


@settings(max_examples=60, deadline=None)
@given(supertrees(), st.randoms(use_true_random=False))
def test_code_invariant_under_relabeling(H, rnd):
    assert is_supertree(H)
    perm = list(range(H.n))
    rnd.shuffle(perm)
    G = H.relabel(perm)
    assert canonical_code(G) == canonical_code(H)
    assert canonical_form(G)[1] == canonical_form(H)[1]


@settings(max_examples=60, deadline=None)
@given(supertrees())
def test_canonical_form_is_a_fixed_point(H):
    code, form = canonical_form(H)
    assert canonical_form(form) == (code, form)


@settings(max_examples=40, deadline=None)
@given(supertrees())
def test_rho_between_min_and_max_degree(H):
    prof = degree_profile(H)
    rho = spectral_radius(H).rho
    assert prof.delta - 1e-10 <= rho <= prof.Delta + 1e-10
    if not prof.regular:
        assert prof.delta < rho < prof.Delta


@settings(max_examples=30, deadline=None)
@given(supertrees(max_edges=6))
def test_solvers_agree(H):
    assert abs(spectral_radius(H).rho - spectral_radius(H, method="dense").rho) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(supertrees(), st.integers(0, 2**32 - 1))
def test_collatz_wielandt_brackets_rho(H, seed):
    y = np.random.default_rng(seed).uniform(0.1, 2.0, H.n)
    lo, hi = collatz_wielandt(H, y)
    rho = spectral_radius(H).rho
    assert lo - 1e-12 <= rho <= hi + 1e-12


@settings(max_examples=60, deadline=None)
@given(supertrees())
def test_hgt_round_trip(H):
    text = write_hgt(H)
    assert read_hgt(text) == H and write_hgt(read_hgt(text)) == text


@settings(max_examples=30, deadline=None)
@given(supertrees(max_edges=5), st.data())
def test_adding_an_edge_raises_rho(H, data):
    a, b = data.draw(st.lists(st.integers(0, H.n - 1), min_size=2, max_size=2, unique=True))
    edge = (a, b, H.n)
    G = H.add_edge(edge)
    assert spectral_radius(G).rho > spectral_radius(H).rho + 1e-10

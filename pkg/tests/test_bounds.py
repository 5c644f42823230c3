"""Classical layer: Macaulay representations, lex segments, minimal growth
in polynomial and truncated rings, Macaulay-lex detection."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import M, poly_ring, powers_ring
from hilbemb.bounds import (cl_min_growth, is_macaulay_lex, lex_segment,
                            macaulay_growth_formula, macaulay_min_growth,
                            macaulay_rep)
from hilbemb.errors import PreconditionError
from hilbemb.rings import QuotientRing


def test_macaulay_rep_zero():
    assert macaulay_rep(0, 3).terms == ()


def test_macaulay_rep_4_2():
    assert macaulay_rep(4, 2).terms == ((3, 2), (1, 1))


def test_macaulay_rep_full_space_single_term():
    # a = C(n+d-1, d) for n=3, d=3
    assert macaulay_rep(10, 3).terms == ((5, 3),)


@given(st.integers(0, 300), st.integers(1, 5))
def test_macaulay_rep_roundtrip(a, d):
    rep = macaulay_rep(a, d)
    assert rep.value() == a
    tops = [k for k, _ in rep.terms]
    assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)


def test_lex_segment_extremes(kk3_ring):
    assert lex_segment(kk3_ring, 1, 0) == ()
    assert lex_segment(kk3_ring, 2, 3) == kk3_ring.standard_basis(2)


def test_lex_segment_three_vars():
    ring = poly_ring(("x1", "x2", "x3"), 3)
    assert lex_segment(ring, 2, 3) == (M(ring, x1=2), M(ring, x1=1, x2=1), M(ring, x1=1, x3=1))


def test_lex_segment_kk2():
    ring = powers_ring(("x", "y"), (2, 2), cap=2)
    assert lex_segment(ring, 1, 1) == (M(ring, x=1),)


def test_lex_segment_range_error(kk3_ring):
    with pytest.raises(PreconditionError):
        lex_segment(kk3_ring, 1, 4)


def test_macaulay_min_growth_values():
    assert macaulay_min_growth(2, 1, 1) == 2
    assert macaulay_min_growth(3, 2, 3) == 6
    # full space grows to the full next degree
    ring = poly_ring(("a", "b", "c"), 3)
    full = len(ring.standard_basis(2))
    assert macaulay_min_growth(3, 2, full) == len(ring.standard_basis(3))


def test_macaulay_formula_matches_direct():
    for n in (1, 2, 3):
        for d in (1, 2, 3):
            top = len(poly_ring(tuple(f"x{i}" for i in range(n)), d).standard_basis(d))
            for r in range(top + 1):
                assert macaulay_growth_formula(n, d, r) == macaulay_min_growth(n, d, r)


def test_macaulay_min_growth_matches_oracle_small_grid():
    for n in (1, 2, 3):
        ring = poly_ring(tuple(f"x{i}" for i in range(n)), 4)
        for d in (1, 2, 3):
            for r in range(len(ring.standard_basis(d)) + 1):
                assert macaulay_min_growth(n, d, r) == ring.min_growth_oracle(d, r)


def test_polynomial_lex_growth_is_prefix():
    # growth of a grlex prefix is a grlex prefix (used by the lex enumerator)
    for n in (2, 3):
        ring = poly_ring(tuple(f"x{i}" for i in range(n)), 4)
        for d in (1, 2, 3):
            basis, nxt = ring.standard_basis(d), ring.standard_basis(d + 1)
            for r in range(len(basis) + 1):
                grown = ring.growth(basis[:r])
                assert grown == frozenset(nxt[:len(grown)])


def test_cl_min_growth_values():
    assert cl_min_growth((2, 2), 1, 1) == 1
    assert cl_min_growth((2, 2, 2), 1, 1) == 2
    assert cl_min_growth((2, 2, 2), 1, 2) == 3
    assert cl_min_growth((2, 3), 2, 0) == 0


def test_cl_min_growth_matches_oracle():
    for bounds in [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, None)]:
        ring = powers_ring(tuple(f"x{i}" for i in range(len(bounds))), bounds, cap=4)
        for d in (1, 2, 3):
            for r in range(len(ring.standard_basis(d)) + 1):
                assert cl_min_growth(bounds, d, r) == ring.min_growth_oracle(d, r)


def test_cl_min_growth_rejects_unsorted():
    with pytest.raises(PreconditionError):
        cl_min_growth((3, 2), 1, 1)
    with pytest.raises(PreconditionError):
        cl_min_growth((None, 2), 1, 1)
    with pytest.raises(PreconditionError):
        cl_min_growth((1, 2), 1, 1)


def test_lex_prefixes_are_embedding_orders():
    # connects the classical bounds to the embedding-order checker
    from hilbemb.orders import GradedOrder, is_embedding_order
    for bounds in [(None, None), (2, 2), (2, 3)]:
        ring = powers_ring(("x", "y"), bounds, cap=4)
        assert is_embedding_order(GradedOrder.grlex(ring)) is None


def test_is_macaulay_lex_cl_ring():
    ring = powers_ring(("x", "y"), (2, 3), cap=4)
    assert is_macaulay_lex(ring) is None


def test_is_macaulay_lex_univariate():
    ring = QuotientRing.create(("x",), (), cap=3)
    assert is_macaulay_lex(ring) is None


def test_is_macaulay_lex_tensor_witness(tensor_ring):
    witness = is_macaulay_lex(tensor_ring)
    assert witness is not None
    # the witness is attainable but not a lex image
    from hilbemb.orders import hilbert_poset
    assert witness in hilbert_poset(tensor_ring)
